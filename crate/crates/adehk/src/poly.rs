//! Sparse multivariate polynomials over a finite field under a weighted
//! monomial order (weighted degree first, reverse-lexicographic tiebreak).
//!
//! Terms are kept sorted descending with respect to the order that created
//! them; every operation takes the field and order explicitly.

use crate::field::{Elem, Field};
use std::cmp::Ordering;
use std::fmt::Write as _;

/// Exponent vector; unused trailing variables stay 0.
pub type Mono = [u32; 3];

pub const MONO_ONE: Mono = [0, 0, 0];

pub fn mono_mul(a: Mono, b: Mono) -> Mono {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

pub fn mono_divides(a: Mono, b: Mono) -> bool {
    a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2]
}

pub fn mono_div(a: Mono, b: Mono) -> Option<Mono> {
    mono_divides(b, a).then(|| [a[0] - b[0], a[1] - b[1], a[2] - b[2]])
}

pub fn mono_lcm(a: Mono, b: Mono) -> Mono {
    [a[0].max(b[0]), a[1].max(b[1]), a[2].max(b[2])]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedOrder {
    pub weights: Vec<i64>,
}

impl WeightedOrder {
    pub fn new(weights: &[i64]) -> Self {
        assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
        assert!(weights.len() <= 3);
        Self {
            weights: weights.to_vec(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn wdeg(&self, m: Mono) -> i64 {
        self.weights
            .iter()
            .enumerate()
            .map(|(i, &w)| w * m[i] as i64)
            .sum()
    }

    /// Total order: weighted degree, then reverse-lexicographic (in the last
    /// position where the exponents differ, the smaller exponent wins).
    pub fn cmp(&self, a: Mono, b: Mono) -> Ordering {
        match self.wdeg(a).cmp(&self.wdeg(b)) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (0..self.nvars()).rev() {
            match a[i].cmp(&b[i]) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

/// Polynomial with terms sorted descending under a fixed order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    pub terms: Vec<(Mono, Elem)>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term(mono: Mono, coeff: Elem, field: &Field) -> Self {
        if field.is_zero(coeff) {
            Self::zero()
        } else {
            Self {
                terms: vec![(mono, coeff)],
            }
        }
    }

    pub fn constant(c: i64, field: &Field) -> Self {
        Self::term(MONO_ONE, field.from_i64(c), field)
    }

    pub fn from_terms(terms: Vec<(Mono, Elem)>, field: &Field, order: &WeightedOrder) -> Self {
        let mut terms = terms;
        terms.sort_by(|a, b| order.cmp(b.0, a.0));
        let mut out: Vec<(Mono, Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 = field.add(last.1, c);
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|&(_, c)| !field.is_zero(c));
        Self { terms: out }
    }

    pub fn leading(&self) -> Option<(Mono, Elem)> {
        self.terms.first().copied()
    }

    pub fn leading_mono(&self) -> Mono {
        self.terms[0].0
    }

    /// `self + c * t^shift * other`, merging two descending term lists.
    pub fn add_scaled(&self, other: &Self, c: Elem, shift: Mono, field: &Field, order: &WeightedOrder) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() || j < other.terms.len() {
            let pick_left = if i >= self.terms.len() {
                false
            } else if j >= other.terms.len() {
                true
            } else {
                let bm = mono_mul(other.terms[j].0, shift);
                match order.cmp(self.terms[i].0, bm) {
                    Ordering::Greater => true,
                    Ordering::Less => false,
                    Ordering::Equal => {
                        let coeff = field.add(self.terms[i].1, field.mul(c, other.terms[j].1));
                        if !field.is_zero(coeff) {
                            out.push((self.terms[i].0, coeff));
                        }
                        i += 1;
                        j += 1;
                        continue;
                    }
                }
            };
            if pick_left {
                out.push(self.terms[i]);
                i += 1;
            } else {
                let coeff = field.mul(c, other.terms[j].1);
                if !field.is_zero(coeff) {
                    out.push((mono_mul(other.terms[j].0, shift), coeff));
                }
                j += 1;
            }
        }
        Self { terms: out }
    }

    pub fn add(&self, other: &Self, field: &Field, order: &WeightedOrder) -> Self {
        self.add_scaled(other, field.one(), MONO_ONE, field, order)
    }

    pub fn sub(&self, other: &Self, field: &Field, order: &WeightedOrder) -> Self {
        self.add_scaled(other, field.from_i64(-1), MONO_ONE, field, order)
    }

    pub fn neg(&self, field: &Field) -> Self {
        Self {
            terms: self.terms.iter().map(|&(m, c)| (m, field.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: Elem, field: &Field) -> Self {
        if field.is_zero(c) {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|&(m, k)| (m, field.mul(c, k)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self, field: &Field, order: &WeightedOrder) -> Self {
        let mut acc = Self::zero();
        for &(m, c) in &self.terms {
            acc = acc.add_scaled(other, c, m, field, order);
        }
        acc
    }

    pub fn pow(&self, e: u32, field: &Field, order: &WeightedOrder) -> Self {
        let mut out = Self::constant(1, field);
        for _ in 0..e {
            out = out.mul(self, field, order);
        }
        out
    }

    pub fn make_monic(&self, field: &Field) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some((_, c)) => self.scale(field.inv(c), field),
        }
    }

    /// True when every term has the same weighted degree.
    pub fn is_homogeneous(&self, order: &WeightedOrder) -> bool {
        match self.terms.first() {
            None => true,
            Some(&(m0, _)) => {
                let d = order.wdeg(m0);
                self.terms.iter().all(|&(m, _)| order.wdeg(m) == d)
            }
        }
    }

    pub fn wdeg(&self, order: &WeightedOrder) -> Option<i64> {
        self.leading().map(|(m, _)| order.wdeg(m))
    }

    pub fn coeff(&self, m: Mono) -> Elem {
        self.terms
            .iter()
            .find(|&&(t, _)| t == m)
            .map(|&(_, c)| c)
            .unwrap_or((0, 0))
    }
}

/// Parses the plain text grammar: `coef*X^a*Y^b*Z^c` terms joined by `+`/`-`.
/// The coefficient token `i` denotes the supplied imaginary unit.
pub fn parse_poly(
    s: &str,
    vars: &[&str],
    field: &Field,
    order: &WeightedOrder,
    imaginary: Option<Elem>,
) -> Result<Poly, String> {
    assert_eq!(vars.len(), order.nvars());
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() || s == "0" {
        return Ok(Poly::zero());
    }
    let mut terms: Vec<(Mono, Elem)> = Vec::new();
    let mut chunks: Vec<(i64, String)> = Vec::new();
    let mut sign = 1i64;
    let mut cur = String::new();
    for (idx, ch) in s.chars().enumerate() {
        if (ch == '+' || ch == '-') && idx > 0 && !cur.is_empty() {
            chunks.push((sign, std::mem::take(&mut cur)));
            sign = if ch == '+' { 1 } else { -1 };
        } else if ch == '-' && cur.is_empty() {
            sign = -sign;
        } else if ch == '+' && cur.is_empty() {
        } else {
            cur.push(ch);
        }
    }
    if cur.is_empty() {
        return Err(format!("trailing operator in '{s}'"));
    }
    chunks.push((sign, cur));
    for (sg, chunk) in chunks {
        let mut coeff = field.from_i64(sg);
        let mut mono = MONO_ONE;
        for factor in chunk.split('*') {
            if factor.is_empty() {
                return Err(format!("empty factor in '{chunk}'"));
            }
            let (base, exp) = match factor.split_once('^') {
                None => (factor, 1u32),
                Some((b, e)) => (
                    b,
                    e.parse::<u32>()
                        .map_err(|_| format!("invalid exponent in '{factor}'"))?,
                ),
            };
            if let Some(v) = vars.iter().position(|&name| name.eq_ignore_ascii_case(base)) {
                mono[v] += exp;
            } else if base == "i" {
                let i = imaginary.ok_or("imaginary unit not available here".to_string())?;
                for _ in 0..exp {
                    coeff = field.mul(coeff, i);
                }
            } else if let Ok(n) = base.parse::<i64>() {
                let mut c = field.from_i64(n);
                if exp != 1 {
                    let mut acc = field.one();
                    for _ in 0..exp {
                        acc = field.mul(acc, c);
                    }
                    c = acc;
                }
                coeff = field.mul(coeff, c);
            } else {
                return Err(format!("unknown symbol '{base}'"));
            }
        }
        terms.push((mono, coeff));
    }
    Ok(Poly::from_terms(terms, field, order))
}

pub fn format_poly(p: &Poly, vars: &[&str], field: &Field) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    // prefer balanced representatives: 6 mod 7 prints as -1
    let signed = |x: u64| -> i64 {
        if x > field.p() / 2 {
            x as i64 - field.p() as i64
        } else {
            x as i64
        }
    };
    for (idx, &(m, c)) in p.terms.iter().enumerate() {
        // display extension elements as a+b*i
        let (re, im) = (signed(c.0), signed(c.1));
        let coeff_str = if im == 0 {
            re.to_string()
        } else if re == 0 {
            match im {
                1 => "i".to_string(),
                -1 => "-i".to_string(),
                _ => format!("{im}*i"),
            }
        } else {
            format!("({re}+{im}*i)")
        };
        let mut factors: Vec<String> = Vec::new();
        let negative = coeff_str.starts_with('-');
        let bare = coeff_str.trim_start_matches('-');
        if (bare != "1" || coeff_str.contains('i')) || m == MONO_ONE {
            factors.push(bare.to_string());
        }
        for (v, &name) in vars.iter().enumerate() {
            match m[v] {
                0 => {}
                1 => factors.push(name.to_string()),
                e => factors.push(format!("{name}^{e}")),
            }
        }
        if negative {
            out.push('-');
        } else if idx > 0 {
            out.push('+');
        }
        let _ = write!(out, "{}", factors.join("*"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_weighted_then_revlex() {
        let ord = WeightedOrder::new(&[15, 10, 6]);
        // X^2 (deg 30) vs Y^3 (deg 30) vs Z^5 (deg 30): revlex tiebreak
        let x2 = [2, 0, 0];
        let y3 = [0, 3, 0];
        let z5 = [0, 0, 5];
        assert_eq!(ord.cmp(x2, y3), Ordering::Greater);
        assert_eq!(ord.cmp(y3, z5), Ordering::Greater);
        assert_eq!(ord.cmp([1, 0, 0], [0, 1, 0]), Ordering::Greater); // 15 > 10
    }

    #[test]
    fn parse_and_format() {
        let f = Field::prime(7);
        let ord = WeightedOrder::new(&[15, 10, 6]);
        let p = parse_poly("X^2+Y^3+Z^5", &["X", "Y", "Z"], &f, &ord, None).unwrap();
        assert_eq!(p.terms.len(), 3);
        assert_eq!(p.leading_mono(), [2, 0, 0]);
        assert_eq!(format_poly(&p, &["X", "Y", "Z"], &f), "X^2+Y^3+Z^5");

        let q = parse_poly("3*X*Y^2 - Z", &["X", "Y", "Z"], &f, &ord, None).unwrap();
        assert_eq!(q.coeff([1, 2, 0]), f.from_i64(3));
        assert_eq!(q.coeff([0, 0, 1]), f.from_i64(-1));
    }

    #[test]
    fn parse_imaginary() {
        let (f, i) = Field::with_imaginary_unit(13);
        let ord = WeightedOrder::new(&[6, 4, 3]);
        let p = parse_poly("i*X+Z^2", &["X", "Y", "Z"], &f, &ord, Some(i)).unwrap();
        assert_eq!(p.coeff([1, 0, 0]), i);
    }

    #[test]
    fn mul_against_naive() {
        let f = Field::prime(5);
        let ord = WeightedOrder::new(&[1, 1]);
        let vars = &["Y", "Z"][..];
        let a = parse_poly("Y+Z", vars, &f, &ord, None).unwrap();
        let b = parse_poly("Y-Z", vars, &f, &ord, None).unwrap();
        let prod = a.mul(&b, &f, &ord);
        let expect = parse_poly("Y^2-Z^2", vars, &f, &ord, None).unwrap();
        assert_eq!(prod, expect);
        let sq = a.pow(2, &f, &ord);
        let expect2 = parse_poly("Y^2+2*Y*Z+Z^2", vars, &f, &ord, None).unwrap();
        assert_eq!(sq, expect2);
    }
}
