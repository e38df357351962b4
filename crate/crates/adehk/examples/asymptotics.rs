//! The shape of HK(q) as q = p^e grows: the ratio HK(q)/q² converges to
//! the Hilbert-Kunz multiplicity e_HK = 2 - 1/|G| for good primes, and to
//! 2 for the finitely many wild primes of each ring.

use adehk::hk::{hk_closed_form, hk_multiplicity};
use adehk::rat::Rat;
use adehk::AdeRing;
use num_bigint::BigInt;

fn main() {
    for ring in [AdeRing::a(3), AdeRing::d(5), AdeRing::e7(), AdeRing::e8()] {
        let ehk = hk_multiplicity(&ring);
        println!("{ring}: e_HK = {ehk} = {:.6}", rat_to_f64(&ehk));
        for p in [2u64, 3, 5, 7] {
            let wild = hk_closed_form(&ring, p, 1) == BigInt::from(2 * p * p);
            let tag = if wild { " (wild: limit is 2)" } else { "" };
            print!("  p = {p}{tag}: HK/q^2 =");
            for e in 1..=4u32 {
                let q2 = Rat::from(BigInt::from(p).pow(2 * e));
                let ratio = Rat::from(hk_closed_form(&ring, p, e)) / q2;
                print!(" {:.8}", rat_to_f64(&ratio));
            }
            println!();
        }
        // γ(q) = HK(q) - e_HK·q² is eventually periodic in e; print one
        // period's worth for a good prime
        let p = 7u64;
        print!("  gamma at p = 7:");
        for e in 1..=5u32 {
            let q2 = Rat::from(BigInt::from(p).pow(2 * e));
            let gamma = Rat::from(hk_closed_form(&ring, p, e)) - ehk.clone() * q2;
            print!(" {gamma}");
        }
        println!("\n");
    }
}

fn rat_to_f64(r: &Rat) -> f64 {
    let scale = BigInt::from(1_000_000_000u64);
    let scaled = (r.numer() * &scale) / r.denom();
    let s: f64 = scaled.to_string().parse().unwrap();
    s / 1e9
}
