//! The catalog of indecomposable maximal Cohen-Macaulay modules of each
//! ADE ring: ranks, generator degrees, duals, Hilbert series, and which
//! catalog entry the Frobenius pushforward Syz(X^q, Y^q, Z^q) lands on.

use adehk::catalog::{CatalogSeries, FrobeniusClass};
use adehk::AdeRing;

fn main() {
    for ring in [AdeRing::d(5), AdeRing::e6(), AdeRing::e7(), AdeRing::e8()] {
        let p = ring.default_prime();
        println!(
            "{ring} (F = {}, group order {}), series over F_{p}:",
            ring.defining_poly_string(),
            ring.group_order()
        );
        let series = ring.catalog_series(p);
        for (spec, s) in ring.catalog().iter().zip(&series) {
            let dual = if spec.dual_index == spec.index {
                "self-dual".to_string()
            } else {
                format!("dual M_{}", spec.dual_index)
            };
            println!(
                "  M_{} (rank {}, {}): generators {:?}",
                spec.index,
                spec.rank,
                dual,
                spec.generators
            );
            match s {
                CatalogSeries::Closed(h) => println!("      H = {h}"),
                CatalogSeries::Truncated(v) => {
                    println!("      H = {:?}... (no closed form found)", &v[..12])
                }
            }
        }
        for p in [7u64, 11, 13] {
            match ring.frobenius_class(p, 1) {
                FrobeniusClass::Catalog { index, twist, rep } => println!(
                    "  Frobenius p = {p}: Syz(X^p,Y^p,Z^p) = M_{index}(-{twist}), rep {rep:?}"
                ),
                FrobeniusClass::FreeSplit { shifts } => {
                    println!("  Frobenius p = {p}: free, shifts {shifts:?}")
                }
                FrobeniusClass::KunzFormula => {
                    println!("  Frobenius p = {p}: Kunz formula")
                }
            }
        }
        println!();
    }
}
