//! Smooth and homotopy invariants of the cover, classification, and
//! comparison of braid pairs.
//!
//! c₁ of the Spin^c structure vanishes for every diagram this crate builds
//! (all components have rotation number 0), so
//! d₃ = (−2χ(X) − 3σ(X))/4 + m with χ(X) = 1 + #components and m the number
//! of (+1) components.

mod rational;
mod signature;
mod snf;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

pub use rational::Rational;
pub use signature::signature;
pub use snf::{smith_normal_form, SmithForm};

use crate::braid::{
    self, cyclic_reduce, free_reduce, pure_negative_level, verify_quasipositive, BraidWord,
    QuasipositivityCertificate,
};
use crate::error::{Error, Result};
use crate::surgery::{build_diagram, detect_special_blocks, SummandTag, SurgeryDiagram};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flag {
    SteinFillable,
    Overtwisted,
    Unknown,
}

impl Flag {
    pub fn as_str(self) -> &'static str {
        match self {
            Flag::SteinFillable => "stein_fillable",
            Flag::Overtwisted => "overtwisted",
            Flag::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub braid: String,
    pub strands: usize,
    pub p: usize,
    pub sl: i64,
    pub components: usize,
    #[serde(with = "rational::bigint_list")]
    pub h1_factors: Vec<BigInt>,
    pub b1: usize,
    pub signature: i64,
    pub euler_char_x: i64,
    pub plus_count: usize,
    pub d3: Rational,
    pub c1_zero: bool,
    pub flags: BTreeSet<Flag>,
    pub summand_tags: Vec<SummandTag>,
    pub notes: Vec<String>,
}

impl InvariantReport {
    /// |H₁| when finite.
    pub fn h1_order(&self) -> Option<BigInt> {
        (self.b1 == 0).then(|| self.h1_factors.iter().product())
    }

    pub fn has_flag(&self, f: Flag) -> bool {
        self.flags.contains(&f)
    }

    pub fn h1_string(&self) -> String {
        let mut parts: Vec<String> = self.h1_factors.iter().map(|f| format!("Z/{f}")).collect();
        parts.extend(std::iter::repeat_n("Z".to_string(), self.b1));
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// d₃ from a diagram and the signature of its linking matrix.
pub fn d3_invariant(d: &SurgeryDiagram, sig: i64) -> Rational {
    let chi = 1 + d.len() as i64;
    Rational::new(-2 * chi - 3 * sig, 4) + Rational::from_integer(d.plus_count() as i64)
}

/// Stein fillable / overtwisted / unknown, from the syntactic criteria.
pub fn classify(
    b: &BraidWord,
    d: &SurgeryDiagram,
    cert: Option<&QuasipositivityCertificate>,
) -> Result<BTreeSet<Flag>> {
    let word = free_reduce(b);
    let mut stein_reason = None;
    if braid::is_positive(&word) {
        stein_reason = Some("the braid word is positive");
    } else if let Some(c) = cert {
        if verify_quasipositive(&word, c)? {
            stein_reason = Some("the quasipositivity certificate verifies");
        }
    }
    let level = pure_negative_level(&word).or_else(|| pure_negative_level(&cyclic_reduce(&word)));
    let ot_block = detect_special_blocks(d).iter().any(|t| matches!(t, SummandTag::OvertwistedSphere { .. }));

    let flag = match (stein_reason, level, ot_block) {
        (Some(why), Some(i), _) => {
            return Err(Error::InconsistentClassification(format!(
                "{why}, but σ_{i} occurs only negatively"
            )))
        }
        (Some(why), None, true) => {
            return Err(Error::InconsistentClassification(format!(
                "{why}, but the diagram splits off an overtwisted sphere"
            )))
        }
        (Some(_), None, false) => Flag::SteinFillable,
        (None, Some(_), _) | (None, None, true) => Flag::Overtwisted,
        (None, None, false) => Flag::Unknown,
    };
    Ok(BTreeSet::from([flag]))
}

pub fn analyze(b: &BraidWord, p: usize) -> Result<InvariantReport> {
    analyze_with(b, p, None)
}

pub fn analyze_with(b: &BraidWord, p: usize, cert: Option<&QuasipositivityCertificate>) -> Result<InvariantReport> {
    let d = build_diagram(b, p)?;
    report_for_diagram(b, &d, cert)
}

/// Everything except building the diagram; `d` must come from `b`.
pub fn report_for_diagram(
    b: &BraidWord,
    d: &SurgeryDiagram,
    cert: Option<&QuasipositivityCertificate>,
) -> Result<InvariantReport> {
    let m = d.linking_matrix();
    let snf = smith_normal_form(&m);
    let sig = signature(&m);
    let flags = classify(b, d, cert)?;
    let summand_tags = detect_special_blocks(d);
    let mut notes = Vec::new();
    if summand_tags.iter().any(|t| matches!(t, SummandTag::S1xS2 { .. })) {
        notes.push(format!(
            "S1xS2 summands are counted from the surgery construction: {} per trivial strand",
            d.params.p - 1
        ));
    }
    Ok(InvariantReport {
        braid: b.to_string(),
        strands: b.strands(),
        p: d.params.p,
        sl: braid::self_linking(b),
        components: d.len(),
        h1_factors: snf.factors,
        b1: snf.corank,
        signature: sig,
        euler_char_x: 1 + d.len() as i64,
        plus_count: d.plus_count(),
        d3: d3_invariant(d, sig),
        c1_zero: true,
        flags,
        summand_tags,
        notes,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Conclusion {
    InvariantsDistinguish,
    InvariantsAgree,
    ContactomorphicIfOvertwisted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonVerdict {
    pub left: InvariantReport,
    pub right: InvariantReport,
    pub sl_match: bool,
    pub smooth_match: bool,
    pub homotopy_match: bool,
    pub conclusion: Conclusion,
    pub caveats: Vec<String>,
}

pub const TWO_TORSION_CAVEAT: &str = "H1 has 2-torsion: c1 = 0 and equal d3 do not by themselves fix the \
     homotopy class of the plane field, since the Spin^c structures may differ";

pub const SMOOTH_TYPE_CAVEAT: &str = "the contactomorphism conclusion assumes the two braids close up to \
     smoothly isotopic links; this is not checked";

pub fn compare(b1: &BraidWord, b2: &BraidWord, p: usize) -> Result<ComparisonVerdict> {
    Ok(verdict(analyze(b1, p)?, analyze(b2, p)?))
}

pub fn verdict(left: InvariantReport, right: InvariantReport) -> ComparisonVerdict {
    let sl_match = left.sl == right.sl;
    let smooth_match = left.h1_factors == right.h1_factors && left.b1 == right.b1;
    let homotopy_match = smooth_match && left.d3 == right.d3;
    let both_ot = left.has_flag(Flag::Overtwisted) && right.has_flag(Flag::Overtwisted);
    let conclusion = match (sl_match && homotopy_match, both_ot) {
        (false, _) => Conclusion::InvariantsDistinguish,
        (true, true) => Conclusion::ContactomorphicIfOvertwisted,
        (true, false) => Conclusion::InvariantsAgree,
    };
    let mut caveats = Vec::new();
    if left.h1_factors.iter().chain(&right.h1_factors).any(|f| f.is_even()) {
        caveats.push(TWO_TORSION_CAVEAT.to_string());
    }
    if conclusion == Conclusion::ContactomorphicIfOvertwisted {
        caveats.push(SMOOTH_TYPE_CAVEAT.to_string());
    }
    ComparisonVerdict { left, right, sl_match, smooth_match, homotopy_match, conclusion, caveats }
}
