//! Static data for the two-dimensional ADE hypersurface rings: weights and
//! defining polynomials, the catalogs of indecomposable maximal
//! Cohen-Macaulay modules (with duality, determinant and ideal-isomorphism
//! data), the pull-back tables, and the resolver that identifies the
//! isomorphism class of Syz(X^q, Y^q, Z^q).
//!
//! Index conventions: A(n) is k[X,Y,Z]/(X^{n+1} - YZ) with n >= 1 and
//! catalog M_1..M_n. D(n) is k[X,Y,Z]/(X^2 + Y^{n-1} + YZ^2) with n >= 4 and
//! catalog M_1..M_n; its "family parameter" h := n - 2 drives the residue
//! arithmetic (group order 4h, residues mod 2h).

use crate::field::Field;
use crate::poly::{parse_poly, Poly, WeightedOrder};
use crate::series::{IntPoly, RationalSeries};
use crate::syzygy::{fit_closed_form, syzygy_graded_dimensions, RingModel};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AdeFamily {
    A(u32),
    D(u32),
    E6,
    E7,
    E8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdeRing {
    pub family: AdeFamily,
}

pub const VARS: [&str; 3] = ["X", "Y", "Z"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct McmModuleSpec {
    pub index: u32,
    pub rank: u32,
    pub generators: Vec<String>,
    pub dual_index: u32,
    pub det_index: Option<u32>,
    pub ideal_iso: Option<[String; 2]>,
    pub uses_imaginary: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogSeries {
    Closed(RationalSeries),
    Truncated(Vec<i64>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FrobeniusClass {
    /// Syz(X^q, Y^q, Z^q) = M_index(-twist) with representative
    /// Syz(X^a, Y^b, Z^c) for the stored exponents.
    Catalog {
        index: u32,
        twist: i64,
        rep: (u32, u32, u32),
    },
    /// Syz(X^q, Y^q, Z^q) = R(-shift_1) + R(-shift_2).
    FreeSplit { shifts: (i64, i64) },
    /// A-family: the Hilbert-Kunz function comes from Kunz's closed formula,
    /// not from the catalog.
    KunzFormula,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Summand {
    O,
    M(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PullbackTarget {
    /// A(1); available for D and E families.
    A1,
    /// A(2h-1) where h = n-2; D family only.
    A2hMinus1,
    /// A(h-1); D family only.
    AhMinus1,
}

impl std::fmt::Display for AdeFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AdeFamily::A(n) => write!(f, "A{n}"),
            AdeFamily::D(n) => write!(f, "D{n}"),
            AdeFamily::E6 => write!(f, "E6"),
            AdeFamily::E7 => write!(f, "E7"),
            AdeFamily::E8 => write!(f, "E8"),
        }
    }
}

impl std::fmt::Display for AdeRing {
    /// Round-trips through [`AdeRing::parse`].
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.family {
            AdeFamily::A(n) => write!(f, "A:n={n}"),
            AdeFamily::D(n) => write!(f, "D:n={}", n - 2),
            fam => write!(f, "{fam}"),
        }
    }
}

impl AdeRing {
    pub fn a(n: u32) -> Self {
        assert!(n >= 1, "A(n) needs n >= 1");
        Self {
            family: AdeFamily::A(n),
        }
    }

    pub fn d(n: u32) -> Self {
        assert!(n >= 4, "D(n) needs n >= 4");
        Self {
            family: AdeFamily::D(n),
        }
    }

    pub fn e6() -> Self {
        Self {
            family: AdeFamily::E6,
        }
    }

    pub fn e7() -> Self {
        Self {
            family: AdeFamily::E7,
        }
    }

    pub fn e8() -> Self {
        Self {
            family: AdeFamily::E8,
        }
    }

    /// Parses ring selectors: `E6`, `E7`, `E8`, `A:n=4`, `D:n=5`.
    pub fn parse(s: &str) -> Result<Self, String> {
        let s = s.trim();
        match s.to_ascii_uppercase().as_str() {
            "E6" => return Ok(Self::e6()),
            "E7" => return Ok(Self::e7()),
            "E8" => return Ok(Self::e8()),
            _ => {}
        }
        let (fam, rest) = s
            .split_once(':')
            .ok_or(format!("unknown ring '{s}' (expected E6|E7|E8|A:n=<k>|D:n=<k>)"))?;
        let n: u32 = rest
            .trim()
            .strip_prefix("n=")
            .ok_or(format!("expected n=<k> in '{s}'"))?
            .parse()
            .map_err(|_| format!("invalid n in '{s}'"))?;
        match fam.trim().to_ascii_uppercase().as_str() {
            "A" if n >= 1 => Ok(Self::a(n)),
            // selector parameter is the D_{n+2} convention: D:n=2 is D_4
            "D" if n >= 2 => Ok(Self::d(n + 2)),
            "A" => Err("A:n=<k> needs k >= 1".into()),
            "D" => Err("D:n=<k> needs k >= 2 (the ring D_{k+2})".into()),
            other => Err(format!("unknown family '{other}'")),
        }
    }

    /// D-family parameter h = n - 2 (group order 4h, residues mod 2h).
    pub fn d_param(&self) -> u32 {
        match self.family {
            AdeFamily::D(n) => n - 2,
            _ => panic!("d_param on non-D ring"),
        }
    }

    pub fn weights(&self) -> [i64; 3] {
        match self.family {
            AdeFamily::A(n) => [2, n as i64 + 1, n as i64 + 1],
            AdeFamily::D(n) => [n as i64 - 1, 2, n as i64 - 2],
            AdeFamily::E6 => [6, 4, 3],
            AdeFamily::E7 => [9, 6, 4],
            AdeFamily::E8 => [15, 10, 6],
        }
    }

    pub fn order(&self) -> WeightedOrder {
        WeightedOrder::new(&self.weights())
    }

    /// The power of X in the normal form X^d - F(Y, Z).
    pub fn d_power(&self) -> u32 {
        match self.family {
            AdeFamily::A(n) => n + 1,
            _ => 2,
        }
    }

    pub fn deg_f(&self) -> i64 {
        self.d_power() as i64 * self.weights()[0]
    }

    pub fn group_order(&self) -> u64 {
        match self.family {
            AdeFamily::A(n) => n as u64 + 1,
            AdeFamily::D(n) => 4 * (n as u64 - 2),
            AdeFamily::E6 => 24,
            AdeFamily::E7 => 48,
            AdeFamily::E8 => 120,
        }
    }

    pub fn defining_poly_string(&self) -> String {
        match self.family {
            AdeFamily::A(n) => format!("X^{}-Y*Z", n + 1),
            AdeFamily::D(n) => format!("X^2+Y^{}+Y*Z^2", n - 1),
            AdeFamily::E6 => "X^2+Y^3+Z^4".to_string(),
            AdeFamily::E7 => "X^2+Y^3+Y*Z^3".to_string(),
            AdeFamily::E8 => "X^2+Y^3+Z^5".to_string(),
        }
    }

    pub fn defining_poly(&self, field: &Field) -> Poly {
        parse_poly(
            &self.defining_poly_string(),
            &VARS,
            field,
            &self.order(),
            None,
        )
        .expect("defining polynomial template is well-formed")
    }

    /// Hilbert series of the ring itself:
    /// (1 - t^{d alpha}) / ((1 - t^alpha)(1 - t^beta)(1 - t^gamma)).
    pub fn hilbert_series(&self) -> RationalSeries {
        let w = self.weights();
        let mut num = IntPoly::one();
        num.add_term(self.deg_f(), -1);
        RationalSeries::new(num, &w)
    }

    /// Smallest prime p = 1 (mod 4) not dividing the group order; the
    /// default characteristic for catalog computations (so that i lives in
    /// the prime field).
    pub fn default_prime(&self) -> u64 {
        let g = self.group_order();
        [13u64, 17, 29, 37, 41, 53, 61, 73, 89, 97, 101, 109, 113]
            .into_iter()
            .find(|&p| g % p != 0)
            .expect("some listed prime is coprime to the group order")
    }

    pub fn catalog(&self) -> Vec<McmModuleSpec> {
        match self.family {
            AdeFamily::A(n) => catalog_a(n),
            AdeFamily::D(n) => catalog_d(n),
            AdeFamily::E6 => catalog_e6(),
            AdeFamily::E7 => catalog_e7(),
            AdeFamily::E8 => catalog_e8(),
        }
    }

    /// Hilbert series of every catalog entry in characteristic p, computed
    /// by the syzygy oracle and fitted to a closed form with denominator
    /// (1-t^beta)(1-t^gamma) where the fit is conclusive.
    ///
    /// Requires p coprime to the group order (the tame case).
    pub fn catalog_series(&self, p: u64) -> Vec<CatalogSeries> {
        assert!(
            self.group_order() % p != 0,
            "characteristic {p} divides the group order {}",
            self.group_order()
        );
        let (field, i) = Field::with_imaginary_unit(p);
        let order = self.order();
        let f = self.defining_poly(&field);
        let model = RingModel::hypersurface(&f, &field, &order).expect("ADE normal form");
        let [_, beta, gamma] = self.weights();
        self.catalog()
            .iter()
            .map(|entry| {
                let gens: Vec<Poly> = entry
                    .generators
                    .iter()
                    .map(|g| parse_poly(g, &VARS, &field, &order, Some(i)).expect("catalog entry"))
                    .collect();
                let degsum: i64 = gens
                    .iter()
                    .map(|g| g.wdeg(&order).expect("nonzero"))
                    .sum();
                let m_max = degsum.max(210);
                let dims = syzygy_graded_dimensions(&model, &gens, &field, m_max)
                    .expect("catalog generators are homogeneous");
                match fit_closed_form(&dims.syzygy, &[beta, gamma]) {
                    Some(series) => CatalogSeries::Closed(series),
                    None => CatalogSeries::Truncated(dims.syzygy[..200.min(dims.syzygy.len())].to_vec()),
                }
            })
            .collect()
    }

    /// The isomorphism class of Syz_R(X^{p^e}, Y^{p^e}, Z^{p^e}).
    /// Classification of Syz(X^q, Y^q, Z^q), q = p^e, by residues.
    ///
    /// For D-rings with odd p dividing h the residue formula is an
    /// extrapolation: the quadratic-form HK evaluation it feeds stays
    /// oracle-exact, but at the boundary residue r = h the module actually
    /// decomposes into the two rank-one entries (which share a Hilbert
    /// series with the named index).
    pub fn frobenius_class(&self, p: u64, e: u32) -> FrobeniusClass {
        let q = pow_u(p, e) as i64;
        match self.family {
            AdeFamily::A(_) => FrobeniusClass::KunzFormula,
            AdeFamily::E8 => {
                if matches!(p, 2 | 3 | 5) {
                    return self.free_split_shifts(q);
                }
                let r = q.rem_euclid(30);
                let twist = 31 * (q - 1) / 2;
                if matches!(r, 1 | 11 | 19 | 29) {
                    FrobeniusClass::Catalog {
                        index: 1,
                        twist,
                        rep: (1, 1, 1),
                    }
                } else {
                    debug_assert!(matches!(r, 7 | 13 | 17 | 23));
                    FrobeniusClass::Catalog {
                        index: 8,
                        twist: twist - 3,
                        rep: (1, 1, 2),
                    }
                }
            }
            AdeFamily::E7 => {
                if matches!(p, 2 | 3) {
                    return self.free_split_shifts(q);
                }
                let r = q.rem_euclid(24);
                let twist = 19 * (q - 1) / 2;
                if matches!(r, 1 | 7 | 17 | 23) {
                    FrobeniusClass::Catalog {
                        index: 1,
                        twist,
                        rep: (1, 1, 1),
                    }
                } else {
                    debug_assert!(matches!(r, 5 | 11 | 13 | 19));
                    FrobeniusClass::Catalog {
                        index: 6,
                        twist: twist - 2,
                        rep: (1, 1, 2),
                    }
                }
            }
            AdeFamily::E6 => {
                if matches!(p, 2 | 3) {
                    return self.free_split_shifts(q);
                }
                FrobeniusClass::Catalog {
                    index: 1,
                    twist: 13 * (q - 1) / 2,
                    rep: (1, 1, 1),
                }
            }
            AdeFamily::D(_) => {
                if p == 2 {
                    return self.free_split_shifts(q);
                }
                let h = self.d_param() as i64;
                let r = q.rem_euclid(2 * h);
                debug_assert_eq!(r % 2, 1, "r is odd whenever p does not divide 4h");
                let m = r.min(2 * h - r);
                let index = (m + 1) as u32;
                // degree bookkeeping: both sides have the same determinant
                // degree, which forces the twist
                let twist = (q * (2 * h + 3) - 2 * h - m - 2) / 2;
                FrobeniusClass::Catalog {
                    index,
                    twist,
                    rep: (1, ((r + 1) / 2) as u32, 1),
                }
            }
        }
    }

    /// Free-split shifts for the wild small characteristics: the proofs give
    /// R(-(s-1)/2 * q) + R(-(s+1)/2 * q) with s = alpha+beta+gamma.
    fn free_split_shifts(&self, q: i64) -> FrobeniusClass {
        let s: i64 = self.weights().iter().sum();
        debug_assert_eq!(s % 2, 1);
        FrobeniusClass::FreeSplit {
            shifts: ((s - 1) / 2 * q, (s + 1) / 2 * q),
        }
    }

    /// Pull-back of catalog entry `index` along the inclusion into the given
    /// target ring (Tables 3.2-3.5).
    pub fn pullback(&self, target: PullbackTarget, index: u32) -> Result<Vec<Summand>, String> {
        let entries = self.catalog().len() as u32;
        if index == 0 || index > entries {
            return Err(format!("no catalog entry M_{index} (1..={entries})"));
        }
        use Summand::{M, O};
        match (self.family, target) {
            (AdeFamily::E6, PullbackTarget::A1) => Ok(match index {
                1 => vec![M(1), M(1)],
                2 => vec![O, O, O],
                3 | 4 => vec![M(1), M(1)],
                _ => vec![O],
            }),
            (AdeFamily::E7, PullbackTarget::A1) => Ok(match index {
                1 => vec![M(1), M(1)],
                2 => vec![O, O, O],
                3 => vec![M(1), M(1), M(1), M(1)],
                4 => vec![O, O],
                5 => vec![O, O, O],
                6 => vec![M(1), M(1)],
                _ => vec![O],
            }),
            (AdeFamily::E8, PullbackTarget::A1) => Ok(match index {
                1 => vec![M(1), M(1)],
                2 => vec![O, O, O],
                3 => vec![M(1); 4],
                4 => vec![O; 5],
                5 => vec![M(1); 6],
                6 => vec![O; 3],
                7 => vec![O; 4],
                _ => vec![M(1), M(1)],
            }),
            (AdeFamily::D(_), target) => {
                let h = self.d_param();
                Ok(pullback_d(h, target, index))
            }
            _ => Err(format!(
                "no pull-back table from {} to that target",
                self.family
            )),
        }
    }
}

fn pow_u(p: u64, e: u32) -> u64 {
    p.checked_pow(e).expect("p^e out of range")
}

fn catalog_a(n: u32) -> Vec<McmModuleSpec> {
    (1..=n)
        .map(|m| McmModuleSpec {
            index: m,
            rank: 1,
            generators: vec![pow_str("X", m), "Z".into()],
            dual_index: n + 1 - m,
            det_index: None,
            ideal_iso: Some([pow_str("X", m), "Y".into()]),
            uses_imaginary: false,
        })
        .collect()
}

fn pow_str(v: &str, e: u32) -> String {
    if e == 1 {
        v.to_string()
    } else {
        format!("{v}^{e}")
    }
}

fn catalog_d(n: u32) -> Vec<McmModuleSpec> {
    let mut out = vec![McmModuleSpec {
        index: 1,
        rank: 1,
        generators: vec!["X".into(), "Y".into()],
        dual_index: 1,
        det_index: None,
        ideal_iso: Some(["X".into(), "Y".into()]),
        uses_imaginary: false,
    }];
    for m in 2..=n - 2 {
        let gens = if m % 2 == 0 {
            vec!["X".into(), pow_str("Y", m / 2), "Z".into()]
        } else {
            vec!["X".into(), pow_str("Y", (m + 1) / 2), "Y*Z".into()]
        };
        out.push(McmModuleSpec {
            index: m,
            rank: 2,
            generators: gens,
            dual_index: m,
            det_index: None,
            ideal_iso: None,
            uses_imaginary: false,
        });
    }
    let (gen_minus, gen_plus, ideal_minus, ideal_plus) = if n % 2 == 0 {
        let y = pow_str("Y", (n - 2) / 2);
        (
            vec!["X".to_string(), format!("Z-i*{y}")],
            vec!["X".to_string(), format!("Z+i*{y}")],
            ["X".to_string(), format!("Z-i*{y}")],
            ["X".to_string(), format!("Z+i*{y}")],
        )
    } else {
        let y = pow_str("Y", (n - 1) / 2);
        (
            vec!["Z".to_string(), format!("X+i*{y}")],
            vec!["Z".to_string(), format!("X-i*{y}")],
            ["Z".to_string(), format!("X-i*{y}")],
            ["Z".to_string(), format!("X+i*{y}")],
        )
    };
    let (dual_a, dual_b) = if n % 2 == 0 { (n - 1, n) } else { (n, n - 1) };
    out.push(McmModuleSpec {
        index: n - 1,
        rank: 1,
        generators: gen_minus,
        dual_index: dual_a,
        det_index: Some(1),
        ideal_iso: Some(ideal_minus),
        uses_imaginary: true,
    });
    out.push(McmModuleSpec {
        index: n,
        rank: 1,
        generators: gen_plus,
        dual_index: dual_b,
        det_index: Some(1),
        ideal_iso: Some(ideal_plus),
        uses_imaginary: true,
    });
    out
}

fn entry(
    index: u32,
    rank: u32,
    generators: &[&str],
    dual_index: u32,
    det_index: Option<u32>,
    ideal_iso: Option<[&str; 2]>,
) -> McmModuleSpec {
    let generators: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
    let uses_imaginary = generators.iter().any(|g| g.contains('i'))
        || ideal_iso.map_or(false, |p| p.iter().any(|g| g.contains('i')));
    McmModuleSpec {
        index,
        rank,
        generators,
        dual_index,
        det_index,
        ideal_iso: ideal_iso.map(|[a, b]| [a.to_string(), b.to_string()]),
        uses_imaginary,
    }
}

fn catalog_e6() -> Vec<McmModuleSpec> {
    vec![
        entry(1, 2, &["X", "Y", "Z"], 1, None, None),
        entry(2, 3, &["X", "Y^2", "Y*Z", "Z^2"], 2, None, None),
        entry(3, 2, &["i*X+Z^2", "Y^2", "Y*Z"], 4, Some(5), None),
        entry(4, 2, &["-i*X+Z^2", "Y^2", "Y*Z"], 3, Some(6), None),
        entry(5, 1, &["-i*X+Z^2", "Y"], 6, None, Some(["i*X+Z^2", "Y"])),
        entry(6, 1, &["i*X+Z^2", "Y"], 5, None, Some(["-i*X+Z^2", "Y"])),
    ]
}

fn catalog_e7() -> Vec<McmModuleSpec> {
    vec![
        entry(1, 2, &["X", "Y", "Z"], 1, None, None),
        entry(2, 3, &["X", "Y^2", "Y*Z", "Z^2"], 2, None, None),
        entry(3, 4, &["X*Y", "X*Z", "Y^2", "Y*Z^2", "Z^3"], 3, None, None),
        entry(4, 2, &["X", "Y^2", "Y*Z"], 4, Some(7), None),
        entry(5, 3, &["X*Y", "X*Z", "Y^2", "Y*Z^2"], 5, Some(7), None),
        entry(6, 2, &["X", "Y", "Z^2"], 6, None, None),
        entry(7, 1, &["X", "Y"], 7, Some(7), Some(["X", "Y"])),
    ]
}

fn catalog_e8() -> Vec<McmModuleSpec> {
    vec![
        entry(1, 2, &["X", "Y", "Z"], 1, None, None),
        entry(2, 3, &["X", "Y^2", "Y*Z", "Z^2"], 2, None, None),
        entry(3, 4, &["X*Y", "X*Z", "Y^2", "Y*Z^2", "Z^3"], 3, None, None),
        entry(
            4,
            5,
            &["X*Y", "X*Z^2", "Y^3", "Y^2*Z", "Y*Z^3", "Z^4"],
            4,
            None,
            None,
        ),
        entry(
            5,
            6,
            &["X*Y^2", "X*Y*Z^2", "X*Z^4", "Y^4", "Y^3*Z", "Y^2*Z^3", "Z^5"],
            5,
            None,
            None,
        ),
        entry(6, 3, &["X", "Y^2", "Y*Z", "Z^3"], 6, None, None),
        entry(7, 4, &["X*Y", "X*Z", "Y^2", "Y*Z^2", "Z^4"], 7, None, None),
        entry(8, 2, &["X", "Y", "Z^2"], 8, None, None),
    ]
}

/// Table 3.2 for D(n) with h = n - 2: columns A(2h-1), A(1), A(h-1).
fn pullback_d(h: u32, target: PullbackTarget, index: u32) -> Vec<Summand> {
    use Summand::{M, O};
    let n = h; // the table's own parameter
    if index == 1 {
        return vec![O];
    }
    if index <= n {
        if index % 2 == 0 {
            let m = index / 2;
            return match target {
                PullbackTarget::A2hMinus1 => vec![M(2 * m - 1), M(2 * (n - m) + 1)],
                PullbackTarget::A1 => vec![M(1), M(1)],
                PullbackTarget::AhMinus1 => {
                    let r = 2 * m - 1;
                    vec![M(r), M(n - r)]
                }
            };
        } else {
            let m = (index + 1) / 2;
            return match target {
                PullbackTarget::A2hMinus1 => vec![M(2 * m - 2), M(2 * (n - m) + 2)],
                PullbackTarget::A1 => vec![O, O],
                PullbackTarget::AhMinus1 => {
                    let r = 2 * m - 2;
                    let mut v = Vec::new();
                    for idx in [r, n - r] {
                        v.push(if idx == 0 { O } else { M(idx) });
                    }
                    v
                }
            };
        }
    }
    // index = n+1 or n+2 in the table's numbering
    match target {
        PullbackTarget::A2hMinus1 => vec![M(n)],
        PullbackTarget::A1 => {
            if n % 2 == 0 {
                vec![O, O]
            } else {
                vec![M(1)]
            }
        }
        PullbackTarget::AhMinus1 => vec![O],
    }
}
