//! Graded syzygy dimensions by plain linear algebra over F_p.
//!
//! For homogeneous generators g_1..g_r of degrees d_i in a graded ring R, the
//! degree-m piece of Syz(g_1..g_r) is the kernel of the evaluation map
//! ⊕ R_{m-d_i} → R_m, so its dimension is the column count minus the rank of
//! one explicit matrix. No Groebner machinery is involved; this is the
//! independent cross-check for the series recursion.

use crate::field::{Elem, Field};
use crate::poly::{Mono, Poly, WeightedOrder, MONO_ONE};
use crate::series::{IntPoly, RationalSeries};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SyzygyError {
    #[error("generator {0} is not homogeneous")]
    NonHomogeneous(usize),
    #[error("generator {0} is zero in the ring")]
    ZeroGenerator(usize),
    #[error("quotient is not of finite colength")]
    NotFiniteColength,
    #[error("unexpected syzygy shape: {0}")]
    UnexpectedShape(String),
}

/// The graded rings the computations run over: a weighted polynomial ring, or
/// a hypersurface k[x_0..]/(x_0^d - g) with g free of x_0.
#[derive(Debug, Clone)]
pub enum RingModel {
    Free {
        order: WeightedOrder,
    },
    Hypersurface {
        order: WeightedOrder,
        d: u32,
        /// the normal form of `x_0^d` in the remaining variables
        g: Poly,
    },
}

impl RingModel {
    pub fn free(weights: &[i64]) -> Self {
        Self::Free {
            order: WeightedOrder::new(weights),
        }
    }

    /// Builds the hypersurface model from the defining polynomial `f`: the
    /// unique highest power of the first variable is solved for.
    pub fn hypersurface(f: &Poly, field: &Field, order: &WeightedOrder) -> Result<Self, String> {
        if !f.is_homogeneous(order) {
            return Err("defining polynomial is not homogeneous".into());
        }
        let d = f.terms.iter().map(|&(m, _)| m[0]).max().ok_or("zero polynomial")?;
        if d == 0 {
            return Err("defining polynomial does not involve the first variable".into());
        }
        let tops: Vec<&(Mono, Elem)> = f.terms.iter().filter(|&&(m, _)| m[0] == d).collect();
        if tops.len() != 1 || tops[0].0 != [d, 0, 0] {
            return Err("highest power of the first variable must be a pure term".into());
        }
        let c = tops[0].1;
        let rest = Poly {
            terms: f
                .terms
                .iter()
                .filter(|&&(m, _)| m[0] < d)
                .copied()
                .collect(),
        };
        // x^d = -rest / c
        let g = rest.scale(field.neg(field.inv(c)), field);
        Ok(Self::Hypersurface {
            order: order.clone(),
            d,
            g,
        })
    }

    pub fn order(&self) -> &WeightedOrder {
        match self {
            Self::Free { order } => order,
            Self::Hypersurface { order, .. } => order,
        }
    }

    /// Monomial basis of the degree-`m` graded piece, in a fixed order.
    pub fn basis(&self, m: i64) -> Vec<Mono> {
        let order = self.order();
        let w = &order.weights;
        let nv = order.nvars();
        let a_cap = match self {
            Self::Free { .. } => u32::MAX,
            Self::Hypersurface { d, .. } => *d,
        };
        let mut out = Vec::new();
        if m < 0 {
            return out;
        }
        let top = |v: usize, rem: i64| (rem / w[v]) as u32;
        match nv {
            2 => {
                for a in 0..=top(0, m).min(a_cap.saturating_sub(1)) {
                    let rem = m - w[0] * a as i64;
                    if rem % w[1] == 0 {
                        out.push([a, top(1, rem), 0]);
                    }
                }
            }
            3 => {
                for a in 0..=top(0, m).min(a_cap.saturating_sub(1)) {
                    let rem_a = m - w[0] * a as i64;
                    for b in 0..=top(1, rem_a) {
                        let rem = rem_a - w[1] * b as i64;
                        if rem % w[2] == 0 {
                            out.push([a, b, top(2, rem)]);
                        }
                    }
                }
            }
            _ => {
                if m == 0 {
                    out.push(MONO_ONE);
                } else if nv == 1 && m % w[0] == 0 {
                    out.push([top(0, m), 0, 0]);
                }
            }
        }
        out
    }

    /// Reduces every power `x_0^a` with `a >= d` via `x_0^d = g`.
    pub fn normal_form(&self, p: &Poly, field: &Field) -> Poly {
        let (order, d, g) = match self {
            Self::Free { .. } => return p.clone(),
            Self::Hypersurface { order, d, g } => (order, *d, g),
        };
        let mut cur = p.clone();
        loop {
            let mut reducible = Poly::zero();
            let mut rest = Poly::zero();
            for &(m, c) in &cur.terms {
                if m[0] >= d {
                    reducible.terms.push((m, c));
                } else {
                    rest.terms.push((m, c));
                }
            }
            if reducible.is_zero() {
                return cur;
            }
            let mut acc = rest;
            for &(m, c) in &reducible.terms {
                let shift = [m[0] - d, m[1], m[2]];
                acc = acc.add_scaled(g, c, shift, field, order);
            }
            cur = acc;
        }
    }

    pub fn mul_nf(&self, a: &Poly, b: &Poly, field: &Field) -> Poly {
        self.normal_form(&a.mul(b, field, self.order()), field)
    }
}

/// Column-reduction rank of a matrix given as columns over `field`.
pub fn matrix_rank(field: &Field, mut cols: Vec<Vec<Elem>>, nrows: usize) -> usize {
    let mut rank = 0;
    let mut pivot_col = 0;
    for row in 0..nrows {
        let Some(k) = (pivot_col..cols.len()).find(|&k| !field.is_zero(cols[k][row])) else {
            continue;
        };
        cols.swap(pivot_col, k);
        let inv = field.inv(cols[pivot_col][row]);
        for j in pivot_col + 1..cols.len() {
            let factor = field.mul(cols[j][row], inv);
            if field.is_zero(factor) {
                continue;
            }
            for r in row..nrows {
                let s = field.mul(factor, cols[pivot_col][r]);
                cols[j][r] = field.sub(cols[j][r], s);
            }
        }
        pivot_col += 1;
        rank += 1;
        if pivot_col == cols.len() {
            break;
        }
    }
    rank
}

#[derive(Debug, Clone)]
pub struct GradedDims {
    /// graded dimensions of Syz(g_1..g_r), degrees 0..=m_max
    pub syzygy: Vec<i64>,
    /// graded dimensions of R/(g_1..g_r)
    pub quotient: Vec<i64>,
    /// weighted degrees of the (normal-formed) generators
    pub degrees: Vec<i64>,
}

/// Dimensions of the graded pieces of the first syzygy module of the given
/// homogeneous generators, for weighted degrees `0..=m_max`.
pub fn syzygy_graded_dimensions(
    model: &RingModel,
    gens: &[Poly],
    field: &Field,
    m_max: i64,
) -> Result<GradedDims, SyzygyError> {
    let order = model.order();
    let mut nf_gens = Vec::with_capacity(gens.len());
    let mut degrees = Vec::with_capacity(gens.len());
    for (i, g) in gens.iter().enumerate() {
        let n = model.normal_form(g, field);
        if n.is_zero() {
            return Err(SyzygyError::ZeroGenerator(i));
        }
        if !n.is_homogeneous(order) {
            return Err(SyzygyError::NonHomogeneous(i));
        }
        degrees.push(n.wdeg(order).unwrap());
        nf_gens.push(n);
    }
    let len = (m_max + 1).max(0) as usize;
    let mut syzygy = vec![0i64; len];
    let mut quotient = vec![0i64; len];
    for m in 0..=m_max {
        let rows = model.basis(m);
        let row_index = |mono: Mono| rows.iter().position(|&r| r == mono).unwrap();
        let mut cols: Vec<Vec<Elem>> = Vec::new();
        for (g, &dg) in nf_gens.iter().zip(&degrees) {
            for mono in model.basis(m - dg) {
                let prod = model.mul_nf(&Poly::term(mono, field.one(), field), g, field);
                let mut col = vec![field.zero(); rows.len()];
                for &(pm, pc) in &prod.terms {
                    col[row_index(pm)] = pc;
                }
                cols.push(col);
            }
        }
        let ncols = cols.len();
        let rank = matrix_rank(field, cols, rows.len());
        syzygy[m as usize] = (ncols - rank) as i64;
        quotient[m as usize] = (rows.len() - rank) as i64;
    }
    Ok(GradedDims {
        syzygy,
        quotient,
        degrees,
    })
}

/// For three homogeneous forms of finite colength in k[y, z], the syzygy
/// module is free of rank 2; returns its two generator degrees `(m, n)`,
/// which always satisfy `m + n = d_1 + d_2 + d_3`.
pub fn split_degrees_rank2(
    model: &RingModel,
    gens: &[Poly],
    field: &Field,
) -> Result<(i64, i64), SyzygyError> {
    let order = model.order();
    assert!(matches!(model, RingModel::Free { .. }) && order.nvars() == 2);
    assert_eq!(gens.len(), 3);
    let dims = syzygy_graded_dimensions(model, gens, field, 0)?;
    let dsum: i64 = dims.degrees.iter().sum();
    let dims = syzygy_graded_dimensions(model, gens, field, dsum)?;
    // a finite-colength quotient has no standard monomials past the socle;
    // a height-one ideal would show nonzero quotient dimensions with gaps
    // smaller than beta + gamma, so this window catches it
    let (beta, gamma) = (order.weights[0], order.weights[1]);
    let window_start = (dsum - beta - gamma + 1).max(0) as usize;
    if dims.quotient[window_start..].iter().any(|&q| q != 0) {
        return Err(SyzygyError::NotFiniteColength);
    }
    // numerator of H_syz * (1 - t^beta)(1 - t^gamma)
    let s = |m: i64| -> i64 {
        if m < 0 {
            0
        } else {
            dims.syzygy[m as usize]
        }
    };
    let mut terms: Vec<(i64, i64)> = Vec::new();
    for m in 0..=dsum {
        let n = s(m) - s(m - beta) - s(m - gamma) + s(m - beta - gamma);
        if n != 0 {
            terms.push((m, n));
        }
    }
    let pair = match terms.as_slice() {
        [(m, 2)] => (*m, *m),
        [(m, 1), (n, 1)] => (*m, *n),
        other => {
            return Err(SyzygyError::UnexpectedShape(format!(
                "numerator terms {other:?}"
            )))
        }
    };
    if pair.0 + pair.1 != dsum {
        return Err(SyzygyError::UnexpectedShape(format!(
            "split degrees {pair:?} do not sum to {dsum}"
        )));
    }
    Ok(pair)
}

/// Fits `coeffs` (a truncated power series) to `N(t) / prod (1 - t^w)`.
/// Succeeds when the induced numerator vanishes in a trailing window long
/// enough to rule out missed terms; returns `None` otherwise.
pub fn fit_closed_form(coeffs: &[i64], den_weights: &[i64]) -> Option<RationalSeries> {
    let mut num: Vec<i64> = coeffs.to_vec();
    for &w in den_weights {
        let w = w as usize;
        for e in (0..num.len()).rev() {
            if e >= w {
                num[e] -= num[e - w];
            }
        }
    }
    let window: i64 = den_weights.iter().sum::<i64>() + 1;
    if (num.len() as i64) <= window {
        return None;
    }
    let cut = num.len() - window as usize;
    if num[cut..].iter().any(|&c| c != 0) {
        return None;
    }
    let mut p = IntPoly::zero();
    for (e, &c) in num.iter().enumerate() {
        p.add_term(e as i64, c);
    }
    Some(RationalSeries::new(p, den_weights))
}
