//! Han's δ-function and the weighted τ gap.
//!
//! δ(t) measures how far p^s·t stays from the odd lattice as s runs over
//! the integers; τ applies it to the degree data of a rank-2 syzygy split
//! and predicts the gap n - m between the two split degrees.

use adehk::delta::{delta, odd_lattice_distance, tau};
use adehk::rat::{rat, rat_int};

fn main() {
    // the triple behind the E8 F-signature story: (q-1)/2 · (1, 1/3, 1/5)
    // scaled to q = 61
    let t = [rat_int(30), rat(61, 3), rat(61, 5)];
    let (u, dist) = odd_lattice_distance(&t);
    println!("t = ({}, {}, {})", t[0], t[1], t[2]);
    println!("nearest odd lattice point: {u:?}, distance {dist}");
    println!("delta_61(t) = {}", delta(61, &t).unwrap());
    println!();

    // δ vanishes on "flat" triples where one entry dominates the other two
    let flat = [rat_int(10), rat_int(4), rat_int(3)];
    println!(
        "delta_7({}, {}, {}) = {} (dominant entry: excess 10 - 4 - 3)",
        flat[0],
        flat[1],
        flat[2],
        delta(7, &flat).unwrap()
    );
    println!();

    // τ for the E8 binomial Y^3 + Z^5 with weights (10, 6): the split
    // degrees of Syz(G^a, Y^b, Z^c) over k[Y,Z] differ by exactly τ
    for (p, exps) in [(7u64, (1i64, 1, 1)), (7, (3, 2, 4)), (11, (5, 1, 2))] {
        let t = [rat_int(exps.0), rat_int(exps.1), rat_int(exps.2)];
        let gap = tau(p, 10, 6, 3, 5, &t).unwrap();
        println!("tau_{p}(10,6; 3,5)({}, {}, {}) = {gap}", exps.0, exps.1, exps.2);
    }
    println!();

    // the scaling law that makes δ a p-adic object: δ(p·t) = p·δ(t)
    let base = [rat(7, 3), rat(11, 5), rat(4, 1)];
    let scaled = [
        base[0].clone() * rat_int(5),
        base[1].clone() * rat_int(5),
        base[2].clone() * rat_int(5),
    ];
    println!(
        "delta_5(5t) = {} = 5 * {} = 5 * delta_5(t)",
        delta(5, &scaled).unwrap(),
        delta(5, &base).unwrap()
    );
}
