//! Pullback decompositions: how the indecomposable MCM modules of a D- or
//! E-ring decompose after base change to a smaller A-type ring inside it.

use adehk::catalog::{PullbackTarget, Summand};
use adehk::AdeRing;

fn show(ring: &AdeRing, target: PullbackTarget, label: &str) {
    println!("{ring} -> {label}:");
    for spec in ring.catalog() {
        match ring.pullback(target, spec.index) {
            Ok(summands) => {
                let parts: Vec<String> = summands
                    .iter()
                    .map(|s| match s {
                        Summand::O => "O".to_string(),
                        Summand::M(k) => format!("M_{k}"),
                    })
                    .collect();
                println!("  M_{} -> {}", spec.index, parts.join(" + "));
            }
            Err(msg) => println!("  M_{} -> ({msg})", spec.index),
        }
    }
    println!();
}

fn main() {
    let d6 = AdeRing::d(6);
    show(&d6, PullbackTarget::A1, "A(1)");
    show(&d6, PullbackTarget::A2hMinus1, "A(2h-1) = A(7)");
    show(&d6, PullbackTarget::AhMinus1, "A(h-1) = A(3)");
    show(&AdeRing::e7(), PullbackTarget::A1, "A(1)");
    show(&AdeRing::e8(), PullbackTarget::A1, "A(1)");
}
