//! Matrix factorizations (φ, ψ) of a hypersurface polynomial F: pair
//! verification, cokernel rank via the determinant, and kernel vectors of
//! column-deleted matrices — the computational side of extracting syzygy
//! generators from a factorization.

use crate::field::{Elem, Field};
use crate::groebner::{buchberger, quotient_dimension};
use crate::poly::{parse_poly, Mono, Poly, WeightedOrder};
use crate::syzygy::RingModel;
use thiserror::Error;

pub type Matrix = Vec<Vec<Poly>>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatFacError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("determinant is not a unit times a power of F ({0})")]
    NotPowerOfF(String),
    #[error("no homogeneous kernel vector within degree bound {bound}")]
    NoSolution { bound: i64 },
    #[error("matrix is not consistently graded: {0}")]
    NotGraded(String),
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Clone)]
pub struct MatFac {
    pub phi: Matrix,
    pub psi: Matrix,
    pub f: Poly,
    pub n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOutcome {
    pub valid: bool,
    pub reduced: bool,
}

fn is_square(m: &Matrix) -> bool {
    let n = m.len();
    m.iter().all(|row| row.len() == n)
}

pub fn mat_mul(a: &Matrix, b: &Matrix, field: &Field, order: &WeightedOrder) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = Poly::zero();
                    for (k, row) in b.iter().enumerate() {
                        acc = acc.add(&a[i][k].mul(&row[j], field, order), field, order);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

impl MatFac {
    pub fn new(phi: Matrix, psi: Matrix, f: Poly) -> Result<Self, MatFacError> {
        let n = phi.len();
        if !is_square(&phi) || !is_square(&psi) || psi.len() != n || n == 0 {
            return Err(MatFacError::DimensionMismatch(format!(
                "need two square matrices of equal size, got {}x? and {}x?",
                phi.len(),
                psi.len()
            )));
        }
        Ok(Self { phi, psi, f, n })
    }

    /// valid: φψ = ψφ = F·E_n exactly; reduced: no entry has a unit
    /// (nonzero constant) term.
    pub fn verify(&self, field: &Field, order: &WeightedOrder) -> VerifyOutcome {
        let target: Matrix = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| if i == j { self.f.clone() } else { Poly::zero() })
                    .collect()
            })
            .collect();
        let valid = mat_mul(&self.phi, &self.psi, field, order) == target
            && mat_mul(&self.psi, &self.phi, field, order) == target;
        let reduced = self
            .phi
            .iter()
            .chain(self.psi.iter())
            .flatten()
            .all(|p| field.is_zero(p.coeff([0, 0, 0])));
        VerifyOutcome { valid, reduced }
    }

    /// Rank of coker(φ) over R = k[X,Y,Z]/(F): the exponent i in
    /// det(φ) = u·F^i, extracted by repeated exact division.
    pub fn coker_rank(&self, field: &Field, order: &WeightedOrder) -> Result<u32, MatFacError> {
        let mut det = determinant(&self.phi, field, order);
        let mut i = 0u32;
        loop {
            if det.is_zero() {
                return Err(MatFacError::NotPowerOfF("determinant is zero".into()));
            }
            if let Some((m, c)) = det.leading() {
                if m == [0, 0, 0] && det.coeff([0, 0, 0]) == c && is_constant(&det) {
                    return Ok(i);
                }
            }
            det = divide_exact(&det, &self.f, field, order).ok_or_else(|| {
                MatFacError::NotPowerOfF(format!("stuck after {i} divisions"))
            })?;
            i += 1;
        }
    }

    /// ψ with column j (0-based) removed, as an n×(n-1) matrix.
    pub fn psi_without_column(&self, j: usize) -> Matrix {
        self.psi
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect()
    }
}

fn is_constant(p: &Poly) -> bool {
    p.terms.iter().all(|(m, _)| *m == [0, 0, 0])
}

/// Determinant by Laplace expansion with memoization over column subsets,
/// so block-diagonal and other structured matrices stay cheap.
pub fn determinant(m: &Matrix, field: &Field, order: &WeightedOrder) -> Poly {
    let n = m.len();
    assert!(n <= 63, "determinant subset encoding limited to 63 columns");
    use std::collections::HashMap;
    // minor over rows n-k..n and the columns in `mask` (popcount k)
    fn minor(
        m: &Matrix,
        row: usize,
        mask: u64,
        cache: &mut HashMap<(usize, u64), Poly>,
        field: &Field,
        order: &WeightedOrder,
    ) -> Poly {
        if mask == 0 {
            return Poly::constant(1, field);
        }
        if let Some(hit) = cache.get(&(row, mask)) {
            return hit.clone();
        }
        let mut acc = Poly::zero();
        let mut sign = 1i64;
        for j in 0..m.len() {
            if mask & (1 << j) == 0 {
                continue;
            }
            if !m[row][j].is_zero() {
                let sub = minor(m, row + 1, mask & !(1 << j), cache, field, order);
                let term = m[row][j].mul(&sub, field, order);
                acc = if sign > 0 {
                    acc.add(&term, field, order)
                } else {
                    acc.sub(&term, field, order)
                };
            }
            // the cofactor sign alternates with the position inside the
            // surviving column set
            sign = -sign;
        }
        cache.insert((row, mask), acc.clone());
        acc
    }
    let mut cache = HashMap::new();
    minor(m, 0, (1u64 << n) - 1, &mut cache, field, order)
}

/// Exact division by f (single-generator Gröbner division; returns None on
/// nonzero remainder).
pub fn divide_exact(p: &Poly, f: &Poly, field: &Field, order: &WeightedOrder) -> Option<Poly> {
    let (fm, fc) = f.leading()?;
    let mut rest = p.clone();
    let mut quot = Poly::zero();
    while let Some((m, c)) = rest.leading() {
        let ratio = crate::poly::mono_div(m, fm)?;
        let coeff = field.div(c, fc);
        let t = Poly::term(ratio, coeff, field);
        quot = quot.add(&t, field, order);
        rest = rest.add_scaled(f, field.neg(coeff), ratio, field, order);
    }
    Some(quot)
}

/// All k×k minors of a matrix.
pub fn minors_of_size(mat: &Matrix, k: usize, field: &Field, order: &WeightedOrder) -> Vec<Poly> {
    let nrows = mat.len();
    let ncols = mat[0].len();
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for last in (k - 1)..n {
            for mut head in subsets(last, k - 1) {
                head.push(last);
                out.push(head);
            }
        }
        out
    }
    let mut minors = Vec::new();
    for rows in subsets(nrows, k) {
        for cols in subsets(ncols, k) {
            let sub: Matrix = rows
                .iter()
                .map(|&r| cols.iter().map(|&c| mat[r][c].clone()).collect())
                .collect();
            minors.push(determinant(&sub, field, order));
        }
    }
    minors
}

/// True iff (F, m×m minors of psi_j) has finite colength, where psi_j has
/// m+1 columns: off the origin the deleted matrix keeps rank m on the
/// hypersurface, so its kernel there is a single line.
pub fn column_choice_check(
    psi_j: &Matrix,
    f: &Poly,
    field: &Field,
    order: &WeightedOrder,
) -> bool {
    let m = psi_j[0].len() - 1;
    let mut gens = vec![f.clone()];
    gens.extend(
        minors_of_size(psi_j, m, field, order)
            .into_iter()
            .filter(|p| !p.is_zero()),
    );
    let gb = buchberger(&gens, field, order);
    quotient_dimension(&gb).is_some()
}

/// Column degrees t_c and row degrees s_r with e_rc = s_r - t_c on nonzero
/// entries, normalized so min(t) = 0. Zero rows get no constraint and are
/// reported as None.
fn grading_of(
    mat: &Matrix,
    order: &WeightedOrder,
) -> Result<(Vec<i64>, Vec<Option<i64>>), MatFacError> {
    let (nrows, ncols) = (mat.len(), mat[0].len());
    let deg = |p: &Poly| -> Result<Option<i64>, MatFacError> {
        if p.is_zero() {
            return Ok(None);
        }
        p.wdeg(order)
            .map(Some)
            .ok_or_else(|| MatFacError::NotGraded("entry is not homogeneous".into()))
    };
    // propagate degrees through the bipartite row/column incidence graph
    let mut t: Vec<Option<i64>> = vec![None; ncols];
    let mut s: Vec<Option<i64>> = vec![None; nrows];
    t[0] = Some(0);
    let mut changed = true;
    while changed {
        changed = false;
        for r in 0..nrows {
            for c in 0..ncols {
                let Some(e) = deg(&mat[r][c])? else { continue };
                match (s[r], t[c]) {
                    (Some(sr), Some(tc)) => {
                        if sr - tc != e {
                            return Err(MatFacError::NotGraded(format!(
                                "entry ({r},{c}) breaks the grading"
                            )));
                        }
                    }
                    (Some(sr), None) => {
                        t[c] = Some(sr - e);
                        changed = true;
                    }
                    (None, Some(tc)) => {
                        s[r] = Some(tc + e);
                        changed = true;
                    }
                    (None, None) => {}
                }
            }
        }
    }
    if t.iter().any(Option::is_none) {
        return Err(MatFacError::NotGraded(
            "some column is not connected to the first one".into(),
        ));
    }
    let mut t: Vec<i64> = t.into_iter().map(Option::unwrap).collect();
    let min = *t.iter().min().unwrap();
    for x in &mut t {
        *x -= min;
    }
    let s = s.into_iter().map(|x| x.map(|v| v - min)).collect();
    Ok((t, s))
}

/// Nullspace vector of a column-major matrix over the field, or None when
/// the kernel is trivial. Deterministic: Gauss-Jordan in column order, free
/// variable of smallest index set to 1.
fn nullspace_vector(field: &Field, mut cols: Vec<Vec<Elem>>, nrows: usize) -> Option<Vec<Elem>> {
    let ncols = cols.len();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut used_rows = vec![false; nrows];
    // reduced row echelon form, processed column by column
    for c in 0..ncols {
        let Some(r) = (0..nrows).find(|&r| !used_rows[r] && !field.is_zero(cols[c][r])) else {
            continue;
        };
        let inv = field.inv(cols[c][r]);
        for col in cols.iter_mut() {
            col[r] = field.mul(col[r], inv);
        }
        let pivot_row: Vec<Elem> = cols.iter().map(|col| col[r]).collect();
        for r2 in 0..nrows {
            if r2 == r {
                continue;
            }
            let factor = cols[c][r2];
            if field.is_zero(factor) {
                continue;
            }
            for (col, &pv) in cols.iter_mut().zip(&pivot_row) {
                let delta = field.mul(factor, pv);
                col[r2] = field.sub(col[r2], delta);
            }
        }
        used_rows[r] = true;
        pivot_of_col[c] = Some(r);
    }
    let free = (0..ncols).find(|&c| pivot_of_col[c].is_none())?;
    let mut v = vec![field.zero(); ncols];
    v[free] = field.one();
    for c in 0..free {
        if let Some(r) = pivot_of_col[c] {
            v[c] = field.neg(cols[free][r]);
        }
    }
    Some(v)
}

/// A nonzero homogeneous v with psi_j · v ≡ 0 (mod F), entries of minimal
/// degree within the bound, first nonzero entry monic. The bound defaults
/// to the sum of the entry degrees in the first fully nonzero row.
pub fn kernel_vector(
    psi_j: &Matrix,
    f: &Poly,
    field: &Field,
    order: &WeightedOrder,
    degree_bound: Option<i64>,
) -> Result<Vec<Poly>, MatFacError> {
    let model = RingModel::hypersurface(f, field, order).map_err(MatFacError::NotGraded)?;
    let (t, s) = grading_of(psi_j, order)?;
    let ncols = psi_j[0].len();
    let bound = degree_bound.unwrap_or_else(|| {
        psi_j
            .iter()
            .map(|row| {
                row.iter()
                    .filter_map(|p| p.wdeg(order))
                    .sum::<i64>()
            })
            .max()
            .unwrap_or(0)
    });
    for shift in 0..=bound {
        // unknowns: coefficients of v_c in the degree-(t_c + shift) slice
        let col_bases: Vec<Vec<Mono>> = t.iter().map(|&tc| model.basis(tc + shift)).collect();
        let offsets: Vec<usize> = col_bases
            .iter()
            .scan(0usize, |acc, b| {
                let o = *acc;
                *acc += b.len();
                Some(o)
            })
            .collect();
        let nunknowns = offsets.last().unwrap() + col_bases.last().unwrap().len();
        if nunknowns == 0 {
            continue;
        }
        // equations: one slice of degree s_r + shift per nonzero row
        let mut row_bases: Vec<(usize, Vec<Mono>)> = Vec::new();
        for (r, sr) in s.iter().enumerate() {
            if let Some(sr) = sr {
                row_bases.push((r, model.basis(sr + shift)));
            }
        }
        let mut row_offsets = Vec::new();
        let mut nrows = 0usize;
        for (_, b) in &row_bases {
            row_offsets.push(nrows);
            nrows += b.len();
        }
        let mut cols: Vec<Vec<Elem>> = vec![vec![field.zero(); nrows]; nunknowns];
        for (c, basis) in col_bases.iter().enumerate() {
            for (k, &mono) in basis.iter().enumerate() {
                let unknown = offsets[c] + k;
                let candidate = Poly::term(mono, field.one(), field);
                for (ri, (r, rb)) in row_bases.iter().enumerate() {
                    if psi_j[*r][c].is_zero() {
                        continue;
                    }
                    let prod = model.mul_nf(&psi_j[*r][c], &candidate, field);
                    for (m, coeff) in &prod.terms {
                        let pos = rb
                            .iter()
                            .position(|bm| bm == m)
                            .expect("normal form stays in the slice basis");
                        cols[unknown][row_offsets[ri] + pos] = *coeff;
                    }
                }
            }
        }
        if let Some(sol) = nullspace_vector(field, cols, nrows) {
            let mut out: Vec<Poly> = Vec::with_capacity(ncols);
            for (c, basis) in col_bases.iter().enumerate() {
                let mut p = Poly::zero();
                for (k, &mono) in basis.iter().enumerate() {
                    let coeff = sol[offsets[c] + k];
                    if !field.is_zero(coeff) {
                        p = p.add(&Poly::term(mono, coeff, field), field, order);
                    }
                }
                out.push(p);
            }
            // normalize: first nonzero entry monic
            let lead = out
                .iter()
                .find_map(|p| p.leading().map(|(_, c)| c))
                .expect("nullspace vector is nonzero");
            let inv = field.inv(lead);
            let out: Vec<Poly> = out.iter().map(|p| p.scale(inv, field)).collect();
            // post-assertion: the product really vanishes mod F
            for row in psi_j {
                let mut acc = Poly::zero();
                for (c, entry) in row.iter().enumerate() {
                    acc = acc.add(&model.mul_nf(entry, &out[c], field), field, order);
                }
                assert!(
                    model.normal_form(&acc, field).is_zero(),
                    "kernel vector failed the residual check"
                );
            }
            return Ok(out);
        }
    }
    Err(MatFacError::NoSolution { bound })
}

/// Parses a bracketed row-major matrix like
/// `[[X, Y], [-Y^2, X]]` with the polynomial grammar of [`parse_poly`].
pub fn parse_matrix(
    text: &str,
    vars: &[&str],
    field: &Field,
    order: &WeightedOrder,
    imaginary: Option<Elem>,
) -> Result<Matrix, MatFacError> {
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| MatFacError::Parse("expected outer [ ... ]".into()))?;
    let mut rows = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for ch in inner.chars() {
        match ch {
            '[' => {
                depth += 1;
                if depth == 1 {
                    current.clear();
                    continue;
                }
            }
            ']' => {
                if depth == 0 {
                    return Err(MatFacError::Parse("unbalanced brackets".into()));
                }
                depth -= 1;
                if depth == 0 {
                    let row: Result<Vec<Poly>, _> = current
                        .split(',')
                        .map(|e| {
                            parse_poly(e.trim(), vars, field, order, imaginary)
                                .map_err(MatFacError::Parse)
                        })
                        .collect();
                    rows.push(row?);
                    continue;
                }
            }
            _ => {}
        }
        if depth >= 1 {
            current.push(ch);
        }
    }
    if rows.is_empty() {
        return Err(MatFacError::Parse("no rows".into()));
    }
    let width = rows[0].len();
    if rows.iter().any(|r| r.len() != width) {
        return Err(MatFacError::Parse("ragged rows".into()));
    }
    Ok(rows)
}

/// The size-4 factorization of X² + Y³ + Z⁵ whose cokernel is the rank-two
/// indecomposable, in the weighted order (15, 10, 6).
pub fn sample_e8_factorization(field: &Field) -> (MatFac, WeightedOrder) {
    let order = WeightedOrder::new(&[15, 10, 6]);
    let vars = ["X", "Y", "Z"];
    let phi = parse_matrix(
        "[[X, Y, Z, 0], [-Y^2, X, 0, Z], [-Z^4, 0, X, -Y], [0, -Z^4, Y^2, X]]",
        &vars,
        field,
        &order,
        None,
    )
    .unwrap();
    let psi = parse_matrix(
        "[[X, -Y, -Z, 0], [Y^2, X, 0, -Z], [Z^4, 0, X, Y], [0, Z^4, -Y^2, X]]",
        &vars,
        field,
        &order,
        None,
    )
    .unwrap();
    let f = parse_poly("X^2 + Y^3 + Z^5", &vars, field, &order, None).unwrap();
    (MatFac::new(phi, psi, f).unwrap(), order)
}

/// The duality witness for the sample factorization: α with
/// α·φ = φ^T·α (so (α, α) realizes (φ, ψ) ≅ (φ^T, ψ^T)).
pub fn sample_duality_witness(field: &Field) -> Matrix {
    let order = WeightedOrder::new(&[15, 10, 6]);
    parse_matrix(
        "[[0, 0, 0, -1], [0, 0, 1, 0], [0, -1, 0, 0], [1, 0, 0, 0]]",
        &["X", "Y", "Z"],
        field,
        &order,
        None,
    )
    .unwrap()
}
