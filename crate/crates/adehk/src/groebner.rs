//! Buchberger's algorithm over F_p (or F_{p^2}) and monomial counting in the
//! quotient. This is the brute-force side of the crate: Hilbert-Kunz values
//! are colengths of Frobenius-power ideals, computed here with no closed-form
//! input whatsoever.

use crate::field::Field;
use crate::poly::{
    mono_div, mono_divides, mono_lcm, mono_mul, Mono, Poly, WeightedOrder, MONO_ONE,
};

#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub gens: Vec<Poly>,
    pub order: WeightedOrder,
}

/// Full normal form: every term of the result is reducible by no basis
/// leading term. Reduction picks the first dividing basis element, so the
/// result is deterministic for a fixed basis ordering.
pub fn normal_form(p: &Poly, basis: &[Poly], field: &Field, order: &WeightedOrder) -> Poly {
    let mut rem = p.clone();
    let mut out = Poly::zero();
    'outer: while let Some((m, c)) = rem.leading() {
        for g in basis {
            let (gm, gc) = g.leading().expect("zero polynomial in basis");
            if let Some(q) = mono_div(m, gm) {
                let factor = field.neg(field.div(c, gc));
                rem = rem.add_scaled(g, factor, q, field, order);
                continue 'outer;
            }
        }
        // leading term irreducible: move it to the output
        out.terms.push((m, c));
        rem.terms.remove(0);
    }
    out
}

fn s_polynomial(f: &Poly, g: &Poly, field: &Field, order: &WeightedOrder) -> Poly {
    let (fm, fc) = f.leading().unwrap();
    let (gm, gc) = g.leading().unwrap();
    let l = mono_lcm(fm, gm);
    let uf = mono_div(l, fm).unwrap();
    let ug = mono_div(l, gm).unwrap();
    let lhs = Poly::zero().add_scaled(f, field.inv(fc), uf, field, order);
    lhs.add_scaled(g, field.neg(field.inv(gc)), ug, field, order)
}

/// Computes the reduced Groebner basis of the ideal generated by `gens`,
/// using the normal pair selection strategy (lowest weighted degree of the
/// leading-term lcm first) and the product criterion.
pub fn buchberger(gens: &[Poly], field: &Field, order: &WeightedOrder) -> GroebnerBasis {
    let mut basis: Vec<Poly> = Vec::new();
    for g in gens {
        let r = normal_form(g, &basis, field, order);
        if !r.is_zero() {
            basis.push(r.make_monic(field));
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }
    while !pairs.is_empty() {
        // normal strategy: minimal lcm under the order
        let mut best = 0;
        let mut best_lcm = mono_lcm(
            basis[pairs[0].0].leading_mono(),
            basis[pairs[0].1].leading_mono(),
        );
        for (k, &(i, j)) in pairs.iter().enumerate().skip(1) {
            let l = mono_lcm(basis[i].leading_mono(), basis[j].leading_mono());
            if order.cmp(l, best_lcm) == std::cmp::Ordering::Less {
                best = k;
                best_lcm = l;
            }
        }
        let (i, j) = pairs.swap_remove(best);
        let (mi, mj) = (basis[i].leading_mono(), basis[j].leading_mono());
        if mono_mul(mi, mj) == mono_lcm(mi, mj) {
            continue; // product criterion: coprime leading terms
        }
        let s = s_polynomial(&basis[i], &basis[j], field, order);
        let r = normal_form(&s, &basis, field, order);
        if !r.is_zero() {
            let idx = basis.len();
            basis.push(r.make_monic(field));
            for k in 0..idx {
                pairs.push((k, idx));
            }
        }
    }
    // minimalize: drop elements whose leading term is divisible by another's
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i != j
                && keep[j]
                && keep[i]
                && mono_divides(basis[j].leading_mono(), basis[i].leading_mono())
            {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Poly> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();
    // tail-reduce each element against the others
    let mut reduced: Vec<Poly> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Poly> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, g)| (j != i).then(|| g.clone()))
            .collect();
        let r = normal_form(&minimal[i], &others, field, order).make_monic(field);
        reduced.push(r);
    }
    reduced.sort_by(|a, b| order.cmp(a.leading_mono(), b.leading_mono()));
    GroebnerBasis {
        gens: reduced,
        order: order.clone(),
    }
}

/// Exponent bounds from the pure-power leading terms, one per variable;
/// `None` when some variable has no pure power (infinite quotient).
fn pure_power_bounds(gb: &GroebnerBasis) -> Option<Vec<u32>> {
    let nv = gb.order.nvars();
    let mut bounds = vec![u32::MAX; nv];
    for g in &gb.gens {
        let m = g.leading_mono();
        let nz: Vec<usize> = (0..nv).filter(|&v| m[v] > 0).collect();
        if m == MONO_ONE {
            return Some(vec![0; nv]); // unit ideal
        }
        if nz.len() == 1 {
            bounds[nz[0]] = bounds[nz[0]].min(m[nz[0]]);
        }
    }
    bounds.iter().all(|&b| b != u32::MAX).then_some(bounds)
}

/// k-dimension of the quotient by the ideal, or `None` when infinite.
/// Counts standard monomials: for each prefix of exponents the reducible
/// region in the last variable is an upward interval, so one minimum
/// suffices per prefix.
pub fn quotient_dimension(gb: &GroebnerBasis) -> Option<u64> {
    let bounds = pure_power_bounds(gb)?;
    let lts: Vec<Mono> = gb.gens.iter().map(|g| g.leading_mono()).collect();
    let nv = gb.order.nvars();
    match nv {
        1 => Some(bounds[0] as u64),
        2 => {
            let mut count = 0u64;
            for a in 0..bounds[0] {
                let bmin = lts
                    .iter()
                    .filter(|m| m[0] <= a)
                    .map(|m| m[1])
                    .min()
                    .unwrap_or(u32::MAX);
                count += bmin as u64;
            }
            Some(count)
        }
        3 => {
            let mut count = 0u64;
            for a in 0..bounds[0] {
                for b in 0..bounds[1] {
                    let cmin = lts
                        .iter()
                        .filter(|m| m[0] <= a && m[1] <= b)
                        .map(|m| m[2])
                        .min()
                        .unwrap_or(bounds[2]);
                    count += cmin as u64;
                }
            }
            Some(count)
        }
        _ => unreachable!(),
    }
}

/// Dimensions of the graded pieces of the quotient for weighted degrees
/// `0..=m_max`. Works for infinite quotients too (the degree cap bounds the
/// enumeration).
pub fn graded_dimensions(gb: &GroebnerBasis, m_max: i64) -> Vec<i64> {
    let lts: Vec<Mono> = gb.gens.iter().map(|g| g.leading_mono()).collect();
    if lts.iter().any(|&m| m == MONO_ONE) {
        return vec![0; (m_max + 1).max(0) as usize];
    }
    let w = &gb.order.weights;
    let nv = gb.order.nvars();
    let mut dims = vec![0i64; (m_max + 1).max(0) as usize];
    let cap = |v: usize, used: i64| -> u32 {
        let room = (m_max - used) / w[v];
        room.clamp(0, u32::MAX as i64 - 1) as u32
    };
    let a_pure = |v: usize| {
        lts.iter()
            .filter(|m| (0..nv).all(|u| u == v || m[u] == 0))
            .map(|m| m[v])
            .min()
            .unwrap_or(u32::MAX)
    };
    match nv {
        1 => {
            for a in 0..a_pure(0).min(cap(0, 0) + 1) {
                dims[(w[0] * a as i64) as usize] += 1;
            }
        }
        2 => {
            for a in 0..a_pure(0).min(cap(0, 0) + 1) {
                let da = w[0] * a as i64;
                let bmin = lts
                    .iter()
                    .filter(|m| m[0] <= a)
                    .map(|m| m[1])
                    .min()
                    .unwrap_or(u32::MAX);
                for b in 0..bmin.min(cap(1, da) + 1) {
                    dims[(da + w[1] * b as i64) as usize] += 1;
                }
            }
        }
        3 => {
            for a in 0..a_pure(0).min(cap(0, 0) + 1) {
                let da = w[0] * a as i64;
                for b in 0..cap(1, da) + 1 {
                    let dab = da + w[1] * b as i64;
                    let cmin = lts
                        .iter()
                        .filter(|m| m[0] <= a && m[1] <= b)
                        .map(|m| m[2])
                        .min()
                        .unwrap_or(u32::MAX);
                    if cmin == 0 {
                        break; // cmin is non-increasing in b, so larger b gives nothing
                    }
                    for c in 0..cmin.min(cap(2, dab) + 1) {
                        dims[(dab + w[2] * c as i64) as usize] += 1;
                    }
                }
            }
        }
        _ => unreachable!(),
    }
    dims
}

/// Builds the Frobenius-power ideal (F, x^q, y^q, z^q) and returns its
/// colength; the independent Hilbert-Kunz oracle.
pub fn colength_with_powers(
    f: &Poly,
    q: u32,
    field: &Field,
    order: &WeightedOrder,
) -> Option<u64> {
    let mut gens = vec![f.clone()];
    for v in 0..order.nvars() {
        let mut m = MONO_ONE;
        m[v] = q;
        gens.push(Poly::term(m, field.one(), field));
    }
    let gb = buchberger(&gens, field, order);
    quotient_dimension(&gb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    const XYZ: [&str; 3] = ["X", "Y", "Z"];

    fn gb_of(strs: &[&str], p: u64, w: &[i64]) -> GroebnerBasis {
        let f = Field::prime(p);
        let ord = WeightedOrder::new(w);
        let gens: Vec<Poly> = strs
            .iter()
            .map(|s| parse_poly(s, &XYZ[..ord.nvars()], &f, &ord, None).unwrap())
            .collect();
        buchberger(&gens, &f, &ord)
    }

    #[test]
    fn monomial_ideal_colength() {
        // (X^2, Y^3, Z^5): colength 2*3*5 = 30
        let gb = gb_of(&["X^2", "Y^3", "Z^5"], 7, &[15, 10, 6]);
        assert_eq!(quotient_dimension(&gb), Some(30));
    }

    #[test]
    fn infinite_quotient() {
        let gb = gb_of(&["X^2", "Y^3"], 7, &[15, 10, 6]);
        assert_eq!(quotient_dimension(&gb), None);
    }

    #[test]
    fn unit_ideal() {
        let gb = gb_of(&["X+1", "X"], 7, &[1, 1, 1]);
        assert_eq!(quotient_dimension(&gb), Some(0));
        assert_eq!(graded_dimensions(&gb, 5), vec![0; 6]);
    }

    #[test]
    fn hk_a1_by_hand() {
        // A_1: X^2 - YZ, p = 3, e = 1: HK = (2 - 1/2)*9 - 1 + 1/2 = 13
        let f = Field::prime(3);
        let ord = WeightedOrder::new(&[2, 2, 2]);
        let poly = parse_poly("X^2-Y*Z", &XYZ, &f, &ord, None).unwrap();
        assert_eq!(colength_with_powers(&poly, 3, &f, &ord), Some(13));
    }

    #[test]
    fn graded_dims_match_total() {
        let gb = gb_of(&["X^2+Y^3+Z^5", "X^7", "Y^7", "Z^7"], 7, &[15, 10, 6]);
        let total = quotient_dimension(&gb).unwrap() as i64;
        // socle degree bounded by sum of weighted degrees of the generators
        let dims = graded_dimensions(&gb, 15 * 14 + 10 * 14 + 6 * 14);
        assert_eq!(dims.iter().sum::<i64>(), total);
    }

    #[test]
    fn normal_form_is_canonical() {
        let f = Field::prime(5);
        let ord = WeightedOrder::new(&[2, 3, 3]);
        let g1 = parse_poly("X^3-Y*Z", &XYZ, &f, &ord, None).unwrap();
        let g2 = parse_poly("Y^2-X^3", &XYZ, &f, &ord, None).unwrap();
        let gb = buchberger(&[g1, g2], &f, &ord);
        let a = parse_poly("Y^2*Z", &XYZ, &f, &ord, None).unwrap();
        let b = parse_poly("X^3*Z", &XYZ, &f, &ord, None).unwrap();
        let na = normal_form(&a, &gb.gens, &f, &ord);
        let nb = normal_form(&b, &gb.gens, &f, &ord);
        assert_eq!(na, nb);
        assert!(!na.is_zero());
    }
}
