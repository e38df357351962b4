//! Hilbert-Kunz values and F-signatures across the ADE families.
//!
//! For each ring and a few primes, prints HK(p^e) from the closed form,
//! the route the classification-based evaluation took, and the F-signature
//! 2·p^{2e} - HK(p^e) where it is defined (D and E families).

use adehk::hk::{f_signature, hk_multiplicity, hk_report};
use adehk::AdeRing;

fn main() {
    let rings = [
        AdeRing::a(2),
        AdeRing::a(5),
        AdeRing::d(4),
        AdeRing::d(7),
        AdeRing::e6(),
        AdeRing::e7(),
        AdeRing::e8(),
    ];
    for ring in &rings {
        println!(
            "{ring}: F = {}, |G| = {}, e_HK = {}",
            ring.defining_poly_string(),
            ring.group_order(),
            hk_multiplicity(ring)
        );
        for p in [2u64, 3, 5, 7, 11] {
            for e in [1u32, 2] {
                // cross-checks closed form vs the lemma route, and vs the
                // Groebner oracle when the quotient is small enough
                let report = hk_report(ring, p, e, Some(200_000)).expect("routes disagree");
                let fsig = match f_signature(ring, p, e) {
                    Ok(s) => format!(", s = {s}"),
                    Err(_) => String::new(),
                };
                let verified = if report.oracle_value.is_some() {
                    " [oracle-checked]"
                } else {
                    ""
                };
                println!(
                    "  HK({p}^{e}) = {:>10}  via {:?}{fsig}{verified}",
                    report.value, report.route
                );
            }
        }
        println!();
    }
}
