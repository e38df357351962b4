//! Han's δ-function on rational triples and the weighted τ-function built
//! on it. Everything is exact rational arithmetic.
//!
//! δ(t) is the excess t_i - t_j - t_k when the triangle inequality fails;
//! otherwise it is (1 - ‖p^s·t - u‖₁)/p^s for the minimal integer s admitting
//! a point u of the odd lattice L_odd = {u ∈ N³ : u_1+u_2+u_3 odd} within
//! taxicab distance < 1 of p^s·t, and 0 when no s qualifies.

use crate::rat::{rat_int, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DeltaError {
    #[error("negative entry in triple")]
    NegativeEntry,
    #[error("incompatible weights: a*alpha = {0} but b*beta = {1}")]
    IncompatibleWeights(i64, i64),
}

/// Nearest point of L_odd in the taxicab norm, with the distance.
/// Ties break toward the lexicographically smallest point.
pub fn odd_lattice_distance(v: &[Rat; 3]) -> ([i64; 3], Rat) {
    let candidates: Vec<Vec<i64>> = v
        .iter()
        .map(|x| {
            let f = x.floor().to_integer().to_i64().expect("coordinate out of range");
            let mut c: Vec<i64> = (f - 1..=f + 2).filter(|&n| n >= 0).collect();
            c.dedup();
            c
        })
        .collect();
    let mut best: Option<([i64; 3], Rat)> = None;
    for &a in &candidates[0] {
        for &b in &candidates[1] {
            for &c in &candidates[2] {
                if (a + b + c) % 2 == 0 {
                    continue;
                }
                let u = [a, b, c];
                let dist: Rat = (0..3)
                    .map(|i| (v[i].clone() - rat_int(u[i])).abs())
                    .sum();
                let better = match &best {
                    None => true,
                    Some((bu, bd)) => dist < *bd || (dist == *bd && u < *bu),
                };
                if better {
                    best = Some((u, dist));
                }
            }
        }
    }
    best.expect("candidate enumeration is never empty")
}

/// Distance-only variant over BigInt lattice points: the scaled triples
/// inside `delta` can exceed the i64 range long before the search ends.
fn odd_lattice_distance_big(v: &[Rat; 3]) -> Rat {
    let candidates: Vec<Vec<BigInt>> = v
        .iter()
        .map(|x| {
            let f = x.floor().to_integer();
            (-1i64..=2)
                .map(|k| &f + BigInt::from(k))
                .filter(|n| !n.is_negative())
                .collect()
        })
        .collect();
    let mut best: Option<Rat> = None;
    for a in &candidates[0] {
        for b in &candidates[1] {
            for c in &candidates[2] {
                if ((a + b + c) % 2u32).is_zero() {
                    continue;
                }
                let u = [a, b, c];
                let dist: Rat = (0..3)
                    .map(|i| (v[i].clone() - Rat::from(u[i].clone())).abs())
                    .sum();
                if best.as_ref().map_or(true, |bd| dist < *bd) {
                    best = Some(dist);
                }
            }
        }
    }
    best.expect("candidate enumeration is never empty")
}

fn multiplicative_order(p: u64, m: u64) -> u64 {
    assert!(m >= 1);
    if m == 1 {
        return 1;
    }
    assert_eq!(num_integer::gcd(p, m), 1);
    let mut x = p % m;
    let mut ord = 1;
    while x != 1 {
        x = x * p % m;
        ord += 1;
    }
    ord
}

fn pow_rat(p: u64, s: i64) -> Rat {
    let b = BigInt::from(p).pow(s.unsigned_abs() as u32);
    if s >= 0 {
        Rat::from(b)
    } else {
        Rat::new(BigInt::one(), b)
    }
}

/// Search bounds for the exponent s. Below s_min the scaled triple is too
/// close to the origin (an even point) for any odd point to be within
/// distance 1; above s_max the fractional parts of p^s·t have completed a
/// full period, so no new lattice configurations appear.
fn s_bounds(p: u64, t: &[Rat; 3]) -> (i64, i64) {
    let sum: Rat = t.iter().cloned().sum();
    let limit = sum + rat_int(1);
    let mut s_min = 0i64;
    let mut power = rat_int(1);
    while power < limit {
        power = power * rat_int(p as i64);
        s_min -= 1;
    }
    // strip p from the denominators
    let mut s0 = 0i64;
    let mut lcm = BigInt::one();
    for x in t {
        let mut d = x.denom().clone();
        let bp = BigInt::from(p);
        let mut v = 0i64;
        while (&d % &bp).is_zero() {
            d /= &bp;
            v += 1;
        }
        s0 = s0.max(v);
        lcm = lcm.lcm(&d);
    }
    let mut m = lcm.to_u64().expect("denominator lcm out of range") * 2;
    while m % p == 0 {
        m /= p;
    }
    let ord = multiplicative_order(p, m) as i64;
    (s_min, s0 + ord + 1)
}

/// Han's δ-function in characteristic p.
pub fn delta(p: u64, t: &[Rat; 3]) -> Result<Rat, DeltaError> {
    if t.iter().any(|x| x.is_negative()) {
        return Err(DeltaError::NegativeEntry);
    }
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let excess = t[i].clone() - &t[j] - &t[k];
        if !excess.is_negative() {
            return Ok(excess);
        }
    }
    let (s_min, s_max) = s_bounds(p, t);
    for s in s_min..=s_max {
        let ps = pow_rat(p, s);
        let v = [
            t[0].clone() * &ps,
            t[1].clone() * &ps,
            t[2].clone() * &ps,
        ];
        let dist = odd_lattice_distance_big(&v);
        if dist < rat_int(1) {
            return Ok((rat_int(1) - dist) / ps);
        }
    }
    Ok(Rat::zero())
}

/// The weighted τ-function of Lemma 4.7-style setups: weights (alpha, beta)
/// with a·alpha = b·beta, τ(t) = a·alpha·δ(t_1, t_2/a, t_3/b).
pub fn tau(
    p: u64,
    alpha: i64,
    beta: i64,
    a: i64,
    b: i64,
    t: &[Rat; 3],
) -> Result<Rat, DeltaError> {
    if a * alpha != b * beta {
        return Err(DeltaError::IncompatibleWeights(a * alpha, b * beta));
    }
    let scaled = [
        t[0].clone(),
        t[1].clone() / rat_int(a),
        t[2].clone() / rat_int(b),
    ];
    Ok(delta(p, &scaled)? * rat_int(a * alpha))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn triple(a: Rat, b: Rat, c: Rat) -> [Rat; 3] {
        [a, b, c]
    }

    #[test]
    fn nearest_odd_point_examples() {
        let (u, d) = odd_lattice_distance(&triple(rat_int(1), rat_int(1), rat_int(1)));
        assert_eq!((u, d), ([1, 1, 1], rat_int(0)));

        let (u, d) = odd_lattice_distance(&triple(rat_int(30), rat(31, 3), rat(31, 5)));
        assert_eq!(u, [30, 11, 6]);
        assert_eq!(d, rat(13, 15));

        let (u, d) = odd_lattice_distance(&triple(rat_int(0), rat_int(0), rat_int(0)));
        assert_eq!(d, rat_int(1));
        assert_eq!(u, [0, 0, 1]); // lexicographically smallest unit vector
    }

    #[test]
    fn delta_degenerate_branch() {
        let d = delta(7, &triple(rat_int(5), rat_int(2), rat_int(1))).unwrap();
        assert_eq!(d, rat_int(2));
        // rotated
        let d = delta(3, &triple(rat_int(1), rat_int(5), rat_int(2))).unwrap();
        assert_eq!(d, rat_int(2));
        let d = delta(3, &triple(rat_int(0), rat_int(0), rat_int(0))).unwrap();
        assert_eq!(d, rat_int(0));
    }

    #[test]
    fn delta_lattice_branch() {
        let d = delta(2, &triple(rat_int(1), rat_int(1), rat_int(1))).unwrap();
        assert_eq!(d, rat_int(1));
        // the Lemma 4.8 computation at p = 61: δ((p-1)/2, p/3, p/5) = 2/15
        let d = delta(61, &triple(rat_int(30), rat(61, 3), rat(61, 5))).unwrap();
        assert_eq!(d, rat(2, 15));
    }

    #[test]
    fn delta_e8_base_case() {
        // δ(1, 1/3, 1/5) = 1 - 1/3 - 1/5 = 7/15 (degenerate branch)
        let d = delta(7, &triple(rat_int(1), rat(1, 3), rat(1, 5))).unwrap();
        assert_eq!(d, rat(7, 15));
    }

    #[test]
    fn tau_examples() {
        // E8 base ring: α=10, β=6, a=3, b=5
        let t = tau(7, 10, 6, 3, 5, &triple(rat_int(1), rat_int(1), rat_int(1))).unwrap();
        assert_eq!(t, rat_int(14));
        let t = tau(61, 10, 6, 3, 5, &triple(rat_int(30), rat_int(61), rat_int(61))).unwrap();
        assert_eq!(t, rat_int(4));
        assert!(tau(7, 10, 6, 3, 4, &triple(rat_int(1), rat_int(1), rat_int(1))).is_err());
    }

    #[test]
    fn delta_homogeneity_spot() {
        for p in [3u64, 5, 7] {
            let t = triple(rat(7, 3), rat(5, 2), rat(1, 5));
            let lhs = delta(
                p,
                &triple(
                    t[0].clone() * rat_int(p as i64),
                    t[1].clone() * rat_int(p as i64),
                    t[2].clone() * rat_int(p as i64),
                ),
            )
            .unwrap();
            let rhs = delta(p, &t).unwrap() * rat_int(p as i64);
            assert_eq!(lhs, rhs);
        }
    }
}
