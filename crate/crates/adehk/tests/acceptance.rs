//! End-to-end acceptance checks. Each numbered criterion prints one
//! pass/fail line; the test fails if any criterion fails.

use adehk::catalog::CatalogSeries;
use adehk::delta::{delta, odd_lattice_distance, tau};
use adehk::engine::{classify_with, syzygy_series, Classification};
use adehk::field::Field;
use adehk::hk::{hk_closed_form, hk_multiplicity, hk_oracle, hk_via_classification};
use adehk::matfac::{column_choice_check, kernel_vector, sample_e8_factorization};
use adehk::poly::{format_poly, Poly};
use adehk::rat::{rat, rat_int, Rat};
use adehk::series::IntPoly;
use adehk::syzygy::{split_degrees_rank2, syzygy_graded_dimensions, RingModel};
use adehk::{AdeRing, RationalSeries};
use num_bigint::BigInt;
use num_traits::Signed;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const CAP: u64 = 1_000_000;

fn c1_e8_hk_values() -> Result<(), String> {
    for p in [7u64, 11, 13, 29, 31] {
        let closed = hk_closed_form(&AdeRing::e8(), p, 1);
        let oracle = hk_oracle(&AdeRing::e8(), p, 1, CAP)
            .ok_or_else(|| format!("oracle skipped at p={p}"))?;
        if closed != oracle {
            return Err(format!("p={p}: closed {closed} != oracle {oracle}"));
        }
    }
    if hk_closed_form(&AdeRing::e8(), 7, 1) != BigInt::from(96) {
        return Err("p=7 value is not 96".into());
    }
    Ok(())
}

fn c2_e8_small_characteristic() -> Result<(), String> {
    for (e, expected) in [(1u32, 8u64), (2, 32), (3, 128)] {
        let closed = hk_closed_form(&AdeRing::e8(), 2, e);
        let (via, _) = hk_via_classification(&AdeRing::e8(), 2, e).map_err(|er| er.to_string())?;
        let oracle = hk_oracle(&AdeRing::e8(), 2, e, CAP).ok_or("oracle skipped")?;
        if closed != BigInt::from(expected) || via != closed || oracle != closed {
            return Err(format!("e={e}: closed {closed}, lemma {via}, oracle {oracle}"));
        }
    }
    Ok(())
}

fn c3_kunz_a_family() -> Result<(), String> {
    for n in 1..=4u32 {
        for p in [3u64, 5, 7, 11] {
            if (n as u64 + 1) % p == 0 {
                continue;
            }
            for e in 1..=2u32 {
                let ring = AdeRing::a(n);
                let closed = hk_closed_form(&ring, p, e);
                let oracle = hk_oracle(&ring, p, e, CAP).ok_or("oracle skipped")?;
                if closed != oracle {
                    return Err(format!("A_{n} p={p} e={e}: {closed} != {oracle}"));
                }
            }
        }
    }
    Ok(())
}

fn c4_d_family() -> Result<(), String> {
    for n in 2..=4u32 {
        for p in [3u64, 5, 7, 11, 13] {
            let ring = AdeRing::d(n + 2);
            let closed = hk_closed_form(&ring, p, 1);
            let oracle = hk_oracle(&ring, p, 1, CAP).ok_or("oracle skipped")?;
            if closed != oracle {
                if (4 * n as u64) % p == 0 {
                    println!("  finding: D_{} p={p} has closed {closed} vs oracle {oracle}", n + 2);
                } else {
                    return Err(format!("D_{} p={p}: {closed} != {oracle}", n + 2));
                }
            }
        }
    }
    Ok(())
}

fn c5_e6_e7() -> Result<(), String> {
    for ring in [AdeRing::e6(), AdeRing::e7()] {
        for p in [5u64, 7, 11, 13] {
            for e in 1..=2u32 {
                let closed = hk_closed_form(&ring, p, e);
                let oracle = hk_oracle(&ring, p, e, CAP).ok_or("oracle skipped")?;
                if closed != oracle {
                    return Err(format!("{ring} p={p} e={e}: {closed} != {oracle}"));
                }
            }
        }
    }
    // the two E7 residue branches: 5 mod 24 and 7 mod 24
    if hk_closed_form(&AdeRing::e7(), 5, 1) != BigInt::from((95 * 25 - 71) / 48) {
        return Err("E7 p=5 is not on the -71/48 branch".into());
    }
    if hk_closed_form(&AdeRing::e7(), 7, 1) != BigInt::from((95 * 49 - 47) / 48) {
        return Err("E7 p=7 is not on the -47/48 branch".into());
    }
    Ok(())
}

fn c6_delta_golden_value() -> Result<(), String> {
    // the lattice-distance sub-result
    let (_, dist) = odd_lattice_distance(&[rat_int(30), rat(31, 3), rat(31, 5)]);
    if dist != rat(13, 15) {
        return Err(format!("lattice distance is {dist}, not 13/15"));
    }
    // the full δ at p = 61 on ((p-1)/2, p/3, p/5)
    let d = delta(61, &[rat_int(30), rat(61, 3), rat(61, 5)]).map_err(|e| e.to_string())?;
    if d != rat(2, 15) {
        return Err(format!("δ is {d}, not 2/15"));
    }
    Ok(())
}

fn c7_printed_series() -> Result<(), String> {
    let h = syzygy_series(&AdeRing::e8(), 7, 1, 1, 1).map_err(|e| e.to_string())?;
    let m1 = RationalSeries::new(IntPoly::from_exponents(&[16, 21, 25, 30]), &[10, 6]);
    if h != m1 || h.denominator_weights() != [6, 10] {
        return Err(format!("syzygy_series(1,1,1) = {h}"));
    }
    let cats = AdeRing::e8().catalog_series(7);
    let m8 = RationalSeries::new(IntPoly::from_exponents(&[22, 25, 27, 30]), &[10, 6]);
    match &cats[7] {
        CatalogSeries::Closed(s) if *s == m8 => Ok(()),
        other => Err(format!("catalog entry 8 is {other:?}")),
    }
}

fn c8_recursion_vs_oracle() -> Result<(), String> {
    let mut rng = StdRng::seed_from_u64(88);
    let rings = [AdeRing::e6(), AdeRing::e7(), AdeRing::e8()];
    for sample in 0..100 {
        let ring = &rings[sample % 3];
        let p = if sample % 2 == 0 { 7u64 } else { 11 };
        let (a, b, c) = (
            rng.gen_range(1..=9u32),
            rng.gen_range(1..=9u32),
            rng.gen_range(1..=9u32),
        );
        let h = syzygy_series(ring, p, a, b, c).map_err(|e| e.to_string())?;
        let field = Field::prime(p);
        let order = ring.order();
        let f = ring.defining_poly(&field);
        let model = RingModel::hypersurface(&f, &field, &order).map_err(|e| e.to_string())?;
        let one = field.one();
        let gens = vec![
            Poly::term([a, 0, 0], one, &field),
            Poly::term([0, b, 0], one, &field),
            Poly::term([0, 0, c], one, &field),
        ];
        let dims = syzygy_graded_dimensions(&model, &gens, &field, 200)
            .map_err(|e| format!("{e:?}"))?
            .syzygy;
        if h.coefficients(200) != dims {
            return Err(format!("{ring} p={p} ({a},{b},{c}): series disagrees with oracle"));
        }
    }
    Ok(())
}

fn c9_frobenius_reproduction() -> Result<(), String> {
    let ring = AdeRing::e8();
    let cats = ring.catalog_series(7);
    for p in [7u64, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]
    {
        let h = syzygy_series(&ring, p, p as u32, p as u32, p as u32).map_err(|e| e.to_string())?;
        let got = classify_with(&h, &ring, &cats);
        let base = 31 * (p as i64 - 1) / 2;
        let expected = match p % 30 {
            1 | 11 | 19 | 29 => Classification::Catalog { index: 1, shift: base },
            7 | 13 | 17 | 23 => Classification::Catalog { index: 8, shift: base - 3 },
            _ => return Err(format!("unexpected residue for p={p}")),
        };
        if got != expected {
            return Err(format!("p={p}: got {got:?}, expected {expected:?}"));
        }
    }
    Ok(())
}

fn c10_matrix_factorization() -> Result<(), String> {
    let field = Field::prime(7);
    let (mf, order) = sample_e8_factorization(&field);
    let outcome = mf.verify(&field, &order);
    if !outcome.valid || !outcome.reduced {
        return Err(format!("verify gave {outcome:?}"));
    }
    if mf.coker_rank(&field, &order) != Ok(2) {
        return Err("cokernel rank is not 2".into());
    }
    let v = kernel_vector(&mf.psi_without_column(0), &mf.f, &field, &order, None)
        .map_err(|e| e.to_string())?;
    let rendered: Vec<String> = v
        .iter()
        .map(|p| format_poly(p, &["X", "Y", "Z"], &field))
        .collect();
    if rendered != ["Z", "-Y", "X"] {
        return Err(format!("kernel vector is {rendered:?}"));
    }
    for j in 0..mf.n {
        if !column_choice_check(&mf.psi_without_column(j), &mf.f, &field, &order) {
            return Err(format!("column {j} deletion fails the rank check"));
        }
    }
    Ok(())
}

fn c11_property_suites() -> Result<(), String> {
    // δ/τ homogeneity under p-scaling, 500 cases per prime
    let mut rng = StdRng::seed_from_u64(1);
    for p in [3u64, 5, 7, 61] {
        for _ in 0..500 {
            let t: [Rat; 3] = std::array::from_fn(|_| {
                rat(rng.gen_range(0..200), rng.gen_range(1..16))
            });
            let scaled: [Rat; 3] = std::array::from_fn(|i| t[i].clone() * rat_int(p as i64));
            let lhs = delta(p, &scaled).map_err(|e| e.to_string())?;
            let rhs = delta(p, &t).map_err(|e| e.to_string())? * rat_int(p as i64);
            if lhs != rhs {
                return Err(format!("δ homogeneity fails at p={p}, t={t:?}"));
            }
            let lt = tau(p, 10, 6, 3, 5, &scaled).map_err(|e| e.to_string())?;
            let rt = tau(p, 10, 6, 3, 5, &t).map_err(|e| e.to_string())? * rat_int(p as i64);
            if lt != rt {
                return Err(format!("τ homogeneity fails at p={p}, t={t:?}"));
            }
        }
    }
    // degree-sum identity on 200 random rank-2 splits
    let setups: [(i64, i64); 3] = [(3, 5), (2, 3), (3, 4)];
    for k in 0..200 {
        let (a, b) = setups[k % 3];
        let p = [3u64, 5, 7][k % 3 as usize];
        let (beta, gamma) = (b, a);
        let e1 = rng.gen_range(1..5u32);
        let e2 = rng.gen_range(1..8u32);
        let e3 = rng.gen_range(1..8u32);
        let field = Field::prime(p);
        let order = adehk::poly::WeightedOrder::new(&[beta, gamma]);
        let model = RingModel::free(&[beta, gamma]);
        let one = field.one();
        let binom = Poly::from_terms(
            vec![([a as u32, 0, 0], one), ([0, b as u32, 0], one)],
            &field,
            &order,
        )
        .pow(e1, &field, &order);
        let gens = vec![
            binom,
            Poly::term([e2, 0, 0], one, &field),
            Poly::term([0, e3, 0], one, &field),
        ];
        let (m, n) = split_degrees_rank2(&model, &gens, &field).map_err(|e| format!("{e:?}"))?;
        let dsum = e1 as i64 * a * b + e2 as i64 * beta + e3 as i64 * gamma;
        if m + n != dsum {
            return Err(format!("degree sum fails for ({a},{b}) p={p}"));
        }
    }
    // HK/p^{2e} within 2/p^{2e} of the multiplicity, e <= 3
    for ring in [
        AdeRing::a(2),
        AdeRing::d(4),
        AdeRing::d(6),
        AdeRing::e6(),
        AdeRing::e7(),
        AdeRing::e8(),
    ] {
        let ehk = hk_multiplicity(&ring);
        for p in [3u64, 7, 13, 31] {
            let wild = hk_closed_form(&ring, p, 1) == BigInt::from(2 * p * p);
            let limit = if wild { rat_int(2) } else { ehk.clone() };
            for e in 1..=3u32 {
                let q2 = Rat::from(BigInt::from(p).pow(2 * e));
                let ratio = Rat::from(hk_closed_form(&ring, p, e)) / q2.clone();
                if (ratio - limit.clone()).abs() > rat_int(2) / q2 {
                    return Err(format!("asymptotics fail for {ring} p={p} e={e}"));
                }
            }
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: Vec<(&str, fn() -> Result<(), String>)> = vec![
        ("E8 closed form vs oracle, p in {7,11,13,29,31}", c1_e8_hk_values),
        ("E8 small characteristic 2*p^2e, both routes", c2_e8_small_characteristic),
        ("Kunz A_n closed form vs oracle", c3_kunz_a_family),
        ("D_{n+2} closed form vs oracle, odd p <= 13", c4_d_family),
        ("E6/E7 closed form vs oracle with residue split", c5_e6_e7),
        ("delta golden value 2/15 and distance 13/15", c6_delta_golden_value),
        ("printed Hilbert series match exactly", c7_printed_series),
        ("recursion vs oracle on 100 random exponent triples", c8_recursion_vs_oracle),
        ("Frobenius classification for primes 7..97", c9_frobenius_reproduction),
        ("matrix factorization checks", c10_matrix_factorization),
        ("property suites (homogeneity, degree sums, asymptotics)", c11_property_suites),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {:2} ({name}): pass", i + 1),
            Err(msg) => {
                failures += 1;
                println!("criterion {:2} ({name}): FAIL — {msg}", i + 1);
            }
        }
    }
    assert_eq!(failures, 0, "{failures} acceptance criteria failed");
}
