//! The lifted open book of the p-fold cyclic branched cover.
//!
//! The page is p copies of the disk glued along slits; it carries the curves
//! α_k^j (sheet k ∈ 1..p−1, strand j ∈ 1..n−1), and a half twist σ_j lifts to
//! right-handed Dehn twists about α_{p−1}^j, …, α_1^j applied in that order.
//! First homology of the page is free on the α-curves, which gives an exact
//! integer model of the monodromy for consistency checks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::braid::{BraidLetter, BraidWord, Sign};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoverParams {
    pub p: usize,
    pub n: usize,
}

impl CoverParams {
    pub fn new(p: usize, n: usize) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidDegree(p));
        }
        if n < 2 {
            return Err(Error::TooFewStrands { strands: n, min: 2 });
        }
        Ok(CoverParams { p, n })
    }

    pub fn curve_count(&self) -> usize {
        (self.p - 1) * (self.n - 1)
    }

    /// Position of α_k^j in the homology basis: strand-major, sheet-minor.
    pub fn curve_index(&self, c: CurveLabel) -> usize {
        (c.strand - 1) * (self.p - 1) + (c.sheet - 1)
    }

    pub fn curves(&self) -> Vec<CurveLabel> {
        (1..self.n)
            .flat_map(|strand| (1..self.p).map(move |sheet| CurveLabel { sheet, strand }))
            .collect()
    }
}

/// α_sheet^strand
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CurveLabel {
    pub sheet: usize,
    pub strand: usize,
}

impl CurveLabel {
    pub fn new(sheet: usize, strand: usize) -> Self {
        CurveLabel { sheet, strand }
    }

    pub fn validate(&self, params: &CoverParams) -> Result<()> {
        if (1..params.p).contains(&self.sheet) && (1..params.n).contains(&self.strand) {
            Ok(())
        } else {
            Err(Error::InvalidCurve { sheet: self.sheet, strand: self.strand, p: params.p, n: params.n })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedPage {
    pub params: CoverParams,
    pub euler_char: i64,
    pub boundary_components: usize,
    pub genus: usize,
    pub curves: Vec<CurveLabel>,
}

/// The fiber surface of the (p, n) torus link, by Riemann–Hurwitz.
pub fn lifted_page(params: CoverParams) -> LiftedPage {
    let (p, n) = (params.p as i64, params.n as i64);
    let euler_char = p + n - p * n;
    let boundary_components = params.n.gcd(&params.p);
    let genus = (2 - euler_char - boundary_components as i64) / 2;
    debug_assert!(genus >= 0);
    LiftedPage { params, euler_char, boundary_components, genus: genus as usize, curves: params.curves() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Handedness {
    Right,
    Left,
}

impl Handedness {
    pub fn value(self) -> i64 {
        match self {
            Handedness::Right => 1,
            Handedness::Left => -1,
        }
    }

    pub fn inverse(self) -> Self {
        match self {
            Handedness::Right => Handedness::Left,
            Handedness::Left => Handedness::Right,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedTwist {
    #[serde(flatten)]
    pub curve: CurveLabel,
    pub handedness: Handedness,
}

/// Dehn twists in application order: `twists[0]` acts first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TwistWord {
    pub twists: Vec<SignedTwist>,
}

impl TwistWord {
    pub fn len(&self) -> usize {
        self.twists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.twists.is_empty()
    }

    pub fn inverse(&self) -> TwistWord {
        TwistWord {
            twists: self
                .twists
                .iter()
                .rev()
                .map(|t| SignedTwist { curve: t.curve, handedness: t.handedness.inverse() })
                .collect(),
        }
    }

    pub fn then(&self, other: &TwistWord) -> TwistWord {
        let mut twists = self.twists.clone();
        twists.extend_from_slice(&other.twists);
        TwistWord { twists }
    }

    /// Cancels adjacent inverse twists on the same curve.
    pub fn free_reduce(&self) -> TwistWord {
        let mut out: Vec<SignedTwist> = Vec::with_capacity(self.twists.len());
        for &t in &self.twists {
            match out.last() {
                Some(top) if top.curve == t.curve && top.handedness != t.handedness => {
                    out.pop();
                }
                _ => out.push(t),
            }
        }
        TwistWord { twists: out }
    }

    pub fn validate(&self, params: &CoverParams) -> Result<()> {
        self.twists.iter().try_for_each(|t| t.curve.validate(params))
    }
}

/// Lift of a single half twist. σ_j becomes D_{p−1}^j, …, D_1^j (first to
/// last); σ_j⁻¹ is the group inverse.
pub fn lift_letter(letter: BraidLetter, params: CoverParams) -> Result<TwistWord> {
    if letter.index == 0 || letter.index >= params.n {
        return Err(Error::IndexOutOfRange { index: letter.index, strands: params.n });
    }
    let j = letter.index;
    let twists = match letter.sign {
        Sign::Pos => (1..params.p)
            .rev()
            .map(|k| SignedTwist { curve: CurveLabel::new(k, j), handedness: Handedness::Right })
            .collect(),
        Sign::Neg => (1..params.p)
            .map(|k| SignedTwist { curve: CurveLabel::new(k, j), handedness: Handedness::Left })
            .collect(),
    };
    Ok(TwistWord { twists })
}

pub fn lift_monodromy(b: &BraidWord, p: usize) -> Result<TwistWord> {
    let params = CoverParams::new(p, b.strands())?;
    let mut twists = Vec::with_capacity(b.len() * (p - 1));
    for &l in b.letters() {
        twists.extend(lift_letter(l, params)?.twists);
    }
    Ok(TwistWord { twists })
}

/// lk(a, b⁺) where b⁺ is a copy of b pushed to a later page.
///
/// Non-zero only for the same curve (−1), the next sheet down (+1), the
/// next strand up (+1) and the diagonal neighbour one sheet down and one
/// strand up (−1).
pub fn pushoff_linking(earlier: CurveLabel, later: CurveLabel) -> i64 {
    let ds = later.sheet as i64 - earlier.sheet as i64;
    let dj = later.strand as i64 - earlier.strand as i64;
    match (ds, dj) {
        (0, 0) | (-1, 1) => -1,
        (-1, 0) | (0, 1) => 1,
        _ => 0,
    }
}

/// Algebraic intersection ⟨a, b⟩ on the page: lk(a, b⁺) − lk(b, a⁺).
pub fn page_intersection(a: CurveLabel, b: CurveLabel) -> i64 {
    pushoff_linking(a, b) - pushoff_linking(b, a)
}

/// Row vector x ↦ ⟨x, α⟩ over the α-basis.
fn pairing_row(params: &CoverParams, alpha: CurveLabel) -> Vec<(usize, i64)> {
    params
        .curves()
        .into_iter()
        .map(|x| (params.curve_index(x), page_intersection(x, alpha)))
        .filter(|&(_, v)| v != 0)
        .collect()
}

/// M ← T M where T is the transvection x ↦ x + h⟨x, α⟩α.
fn apply_twist(m: &mut IntMatrix, params: &CoverParams, twist: &SignedTwist) {
    let a = params.curve_index(twist.curve);
    let h = twist.handedness.value();
    let row = pairing_row(params, twist.curve);
    for col in 0..m.cols() {
        let mut acc = BigInt::zero();
        for &(x, v) in &row {
            acc += &m[(x, col)] * v;
        }
        if !acc.is_zero() {
            m[(a, col)] += acc * h;
        }
    }
}

/// Action of the twist word on H₁(page) in the α-basis (column vectors).
pub fn homology_action(w: &TwistWord, params: CoverParams) -> Result<IntMatrix> {
    w.validate(&params)?;
    let mut m = IntMatrix::identity(params.curve_count());
    for t in &w.twists {
        apply_twist(&mut m, &params, t);
    }
    Ok(m)
}

/// Variation map H₁(page, ∂) → H₁(page) of the monodromy, with relative
/// classes written in the dual basis. Its cokernel is H₁ of the closed
/// 3-manifold carried by the open book.
pub fn variation_matrix(w: &TwistWord, params: CoverParams) -> Result<IntMatrix> {
    w.validate(&params)?;
    let size = params.curve_count();
    let mut var = IntMatrix::zeros(size, size);
    for t in &w.twists {
        apply_twist(&mut var, &params, t);
        let a = params.curve_index(t.curve);
        var[(a, a)] += t.handedness.value();
    }
    Ok(var)
}

/// Checks the braid relations for the lifted generators on homology.
pub fn verify_lift_relations(params: CoverParams) -> bool {
    let lifts: Vec<IntMatrix> = (1..params.n)
        .map(|j| {
            let w = lift_letter(BraidLetter::pos(j), params).expect("index in range");
            homology_action(&w, params).expect("labels valid")
        })
        .collect();
    let m = lifts.len();
    for i in 0..m {
        if i + 1 < m {
            let (a, b) = (&lifts[i], &lifts[i + 1]);
            if &(a * b) * a != &(b * a) * b {
                return false;
            }
        }
        for j in i + 2..m {
            if &lifts[i] * &lifts[j] != &lifts[j] * &lifts[i] {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;

    fn params(p: usize, n: usize) -> CoverParams {
        CoverParams::new(p, n).unwrap()
    }

    #[test]
    fn page_topology() {
        let a = lifted_page(params(2, 2));
        assert_eq!((a.euler_char, a.boundary_components, a.genus), (0, 2, 0));
        let b = lifted_page(params(4, 5));
        assert_eq!((b.euler_char, b.boundary_components, b.genus), (-11, 1, 6));
        let c = lifted_page(params(2, 3));
        assert_eq!((c.euler_char, c.boundary_components, c.genus), (-1, 1, 1));
        for p in 2..7 {
            for n in 2..7 {
                let page = lifted_page(params(p, n));
                assert_eq!((1 - page.euler_char) as usize, page.curves.len());
            }
        }
    }

    #[test]
    fn bad_params() {
        assert_eq!(CoverParams::new(1, 3), Err(Error::InvalidDegree(1)));
        assert!(CoverParams::new(2, 1).is_err());
        assert!(CurveLabel::new(3, 1).validate(&params(3, 2)).is_err());
    }

    #[test]
    fn lift_order() {
        let w = lift_letter(BraidLetter::pos(1), params(3, 2)).unwrap();
        let labels: Vec<_> = w.twists.iter().map(|t| (t.curve.sheet, t.handedness)).collect();
        assert_eq!(labels, vec![(2, Handedness::Right), (1, Handedness::Right)]);

        let w = lift_letter(BraidLetter::neg(1), params(3, 2)).unwrap();
        let labels: Vec<_> = w.twists.iter().map(|t| (t.curve.sheet, t.handedness)).collect();
        assert_eq!(labels, vec![(1, Handedness::Left), (2, Handedness::Left)]);

        let w = lift_letter(BraidLetter::pos(2), params(2, 4)).unwrap();
        assert_eq!(w.twists, vec![SignedTwist { curve: CurveLabel::new(1, 2), handedness: Handedness::Right }]);

        assert_eq!(
            lift_letter(BraidLetter::neg(1), params(4, 2)).unwrap(),
            lift_letter(BraidLetter::pos(1), params(4, 2)).unwrap().inverse()
        );
    }

    #[test]
    fn lift_words() {
        let base = parse_braid("s1 s2 s3", 4).unwrap();
        let w = lift_monodromy(&base, 3).unwrap();
        assert_eq!(w.len(), 6);
        assert!(w.twists.iter().all(|t| t.handedness == Handedness::Right));
        assert!(lift_monodromy(&parse_braid("", 3).unwrap(), 4).unwrap().is_empty());
        let pair = lift_monodromy(&parse_braid("s1 -s1", 2).unwrap(), 4).unwrap();
        assert_eq!(pair.len(), 6);
        assert!(pair.free_reduce().is_empty());
    }

    #[test]
    fn intersection_pattern() {
        let c = CurveLabel::new;
        assert_eq!(page_intersection(c(1, 1), c(1, 1)), 0);
        assert_eq!(page_intersection(c(2, 1), c(1, 1)), 1);
        assert_eq!(page_intersection(c(1, 1), c(2, 1)), -1);
        assert_eq!(page_intersection(c(1, 1), c(1, 3)), 0);
        assert_eq!(page_intersection(c(1, 1), c(1, 2)), 1);
        assert_eq!(page_intersection(c(2, 1), c(1, 2)), -1);
        // (k+1, j+1) is not adjacent
        assert_eq!(page_intersection(c(1, 1), c(2, 2)), 0);
        for a in params(5, 5).curves() {
            for b in params(5, 5).curves() {
                assert_eq!(page_intersection(a, b), -page_intersection(b, a));
            }
        }
    }

    #[test]
    fn action_basics() {
        let pr = params(3, 3);
        assert_eq!(homology_action(&TwistWord::default(), pr).unwrap(), IntMatrix::identity(4));
        let alpha = CurveLabel::new(1, 2);
        let w = TwistWord {
            twists: vec![
                SignedTwist { curve: alpha, handedness: Handedness::Right },
                SignedTwist { curve: alpha, handedness: Handedness::Left },
            ],
        };
        assert_eq!(homology_action(&w, pr).unwrap(), IntMatrix::identity(4));
        let bad = TwistWord { twists: vec![SignedTwist { curve: CurveLabel::new(3, 1), handedness: Handedness::Right }] };
        assert!(homology_action(&bad, pr).is_err());
    }

    #[test]
    fn braid_relation_n3() {
        for p in 2..=5 {
            let pr = params(p, 3);
            let s1 = homology_action(&lift_letter(BraidLetter::pos(1), pr).unwrap(), pr).unwrap();
            let s2 = homology_action(&lift_letter(BraidLetter::pos(2), pr).unwrap(), pr).unwrap();
            assert_eq!(&(&s1 * &s2) * &s1, &(&s2 * &s1) * &s2, "p={p}");
        }
    }

    #[test]
    fn lift_relations_grid() {
        for p in 2..=5 {
            for n in 2..=5 {
                assert!(verify_lift_relations(params(p, n)), "p={p} n={n}");
            }
        }
    }

    #[test]
    fn variation_of_lens_family() {
        // σ₁⁻ᵏ in B₂, p = 2: annulus page, k left twists on the core.
        for k in 1..6usize {
            let b = parse_braid(&format!("s1^-{k}"), 2).unwrap();
            let var = variation_matrix(&lift_monodromy(&b, 2).unwrap(), params(2, 2)).unwrap();
            assert_eq!(var, IntMatrix::from_rows(&[vec![-(k as i64)]]));
        }
    }

    #[test]
    fn twist_word_json() {
        let w = lift_letter(BraidLetter::neg(2), params(2, 3)).unwrap();
        assert_eq!(serde_json::to_string(&w).unwrap(), r#"[{"sheet":1,"strand":2,"handedness":"left"}]"#);
        let back: TwistWord = serde_json::from_str(&serde_json::to_string(&w).unwrap()).unwrap();
        assert_eq!(back, w);
    }
}
