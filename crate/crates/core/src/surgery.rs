//! Contact (±1)-surgery presentation of the branched cover.
//!
//! Starting from the open book of (S³, ξ_std) carried by σ₁…σ_{n−1}, every
//! further letter contributes p−1 Legendrian push-offs of α-curves placed on
//! fresh, later pages. Right twists become contact (−1) surgeries, left twists
//! contact (+1) surgeries; all components are tb = −1 unknots with rotation 0.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::braid::{BraidLetter, BraidWord, Sign};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::openbook::{pushoff_linking, CoverParams, CurveLabel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum ContactCoeff {
    Minus,
    Plus,
}

impl ContactCoeff {
    pub fn value(self) -> i64 {
        match self {
            ContactCoeff::Minus => -1,
            ContactCoeff::Plus => 1,
        }
    }
}

impl From<ContactCoeff> for i8 {
    fn from(c: ContactCoeff) -> i8 {
        c.value() as i8
    }
}

impl TryFrom<i8> for ContactCoeff {
    type Error = String;
    fn try_from(v: i8) -> std::result::Result<Self, String> {
        match v {
            -1 => Ok(ContactCoeff::Minus),
            1 => Ok(ContactCoeff::Plus),
            _ => Err(format!("contact coefficient must be +1 or -1, got {v}")),
        }
    }
}

pub const TB: i64 = -1;
pub const ROTATION: i64 = 0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurgeryComponent {
    #[serde(flatten)]
    pub curve: CurveLabel,
    pub time: usize,
    pub contact: ContactCoeff,
}

impl SurgeryComponent {
    /// tb + contact coefficient: −2 for Legendrian surgery, 0 for (+1).
    pub fn smooth_framing(&self) -> i64 {
        TB + self.contact.value()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurgeryDiagram {
    pub params: CoverParams,
    pub components: Vec<SurgeryComponent>,
    pub linking: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
struct RawDiagram {
    params: CoverParams,
    components: Vec<SurgeryComponent>,
    linking: Vec<Vec<i64>>,
}

impl<'de> Deserialize<'de> for SurgeryDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawDiagram::deserialize(d)?;
        let diagram = SurgeryDiagram { params: raw.params, components: raw.components, linking: raw.linking };
        diagram.validate().map_err(serde::de::Error::custom)?;
        Ok(diagram)
    }
}

impl SurgeryDiagram {
    /// Builds the linking matrix for components already in time order.
    pub fn from_components(params: CoverParams, components: Vec<SurgeryComponent>) -> Result<Self> {
        let size = components.len();
        let mut linking = vec![vec![0i64; size]; size];
        for a in 0..size {
            linking[a][a] = components[a].smooth_framing();
            for b in a + 1..size {
                let v = linking_rule(&components[a], &components[b])?;
                linking[a][b] = v;
                linking[b][a] = v;
            }
        }
        Ok(SurgeryDiagram { params, components, linking })
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Number of contact (+1) components.
    pub fn plus_count(&self) -> usize {
        self.components.iter().filter(|c| c.contact == ContactCoeff::Plus).count()
    }

    pub fn linking_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.linking)
    }

    /// Index of the normalized letter a component came from.
    pub fn letter_of(&self, component: &SurgeryComponent) -> usize {
        component.time / (self.params.p - 1)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidDiagram(msg));
        let size = self.components.len();
        CoverParams::new(self.params.p, self.params.n)?;
        if self.linking.len() != size || self.linking.iter().any(|r| r.len() != size) {
            return bad(format!("linking matrix is not {size}x{size}"));
        }
        for (i, c) in self.components.iter().enumerate() {
            c.curve.validate(&self.params)?;
            if i > 0 && self.components[i - 1].time >= c.time {
                return bad(format!("times not strictly increasing at component {i}"));
            }
            if self.linking[i][i] != c.smooth_framing() {
                return bad(format!("diagonal entry {i} does not match the framing"));
            }
            for j in 0..i {
                if self.linking[i][j] != self.linking[j][i] {
                    return bad(format!("linking matrix not symmetric at ({i}, {j})"));
                }
                if !(-1..=1).contains(&self.linking[i][j]) {
                    return bad(format!("linking entry ({i}, {j}) out of range"));
                }
            }
        }
        Ok(())
    }

    /// Connected components of the linking graph, each as a list of
    /// component indices in time order. Blocks are ordered by first index.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let size = self.len();
        let mut block_of = vec![usize::MAX; size];
        let mut blocks = Vec::new();
        for start in 0..size {
            if block_of[start] != usize::MAX {
                continue;
            }
            let id = blocks.len();
            let mut members = vec![start];
            block_of[start] = id;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for j in 0..size {
                    if j != i && self.linking[i][j] != 0 && block_of[j] == usize::MAX {
                        block_of[j] = id;
                        members.push(j);
                        stack.push(j);
                    }
                }
            }
            members.sort_unstable();
            blocks.push(members);
        }
        blocks
    }

    /// The sub-diagram on the given component indices.
    pub fn restrict(&self, idx: &[usize]) -> SurgeryDiagram {
        SurgeryDiagram {
            params: self.params,
            components: idx.iter().map(|&i| self.components[i]).collect(),
            linking: idx.iter().map(|&i| idx.iter().map(|&j| self.linking[i][j]).collect()).collect(),
        }
    }
}

/// Linking number of two components; `earlier` must sit on an earlier page.
pub fn linking_rule(earlier: &SurgeryComponent, later: &SurgeryComponent) -> Result<i64> {
    if earlier.time == later.time {
        return Err(Error::EqualTimes(earlier.time));
    }
    let (e, l) = if earlier.time < later.time { (earlier, later) } else { (later, earlier) };
    Ok(pushoff_linking(e.curve, l.curve))
}

/// Splits off the base unknot σ₁…σ_{n−1}.
///
/// If the word begins with it literally, the prefix is consumed. Otherwise the
/// word is multiplied on the left by the trivial word σ₁…σ_{n−1}·σ_{n−1}⁻¹…σ₁⁻¹
/// and the inverse letters that cancel against the start of the word are
/// dropped.
pub fn prefix_normalize(b: &BraidWord) -> Result<(bool, BraidWord)> {
    let n = b.strands();
    if n < 2 {
        return Err(Error::TooFewStrands { strands: n, min: 2 });
    }
    let base: Vec<BraidLetter> = (1..n).map(BraidLetter::pos).collect();
    if b.letters().starts_with(&base) {
        return Ok((true, BraidWord::new(n, b.letters()[n - 1..].to_vec())?));
    }
    let mut head: Vec<BraidLetter> = (1..n).rev().map(BraidLetter::neg).collect();
    let mut rest = b.letters();
    while let (Some(&last), Some(&first)) = (head.last(), rest.first()) {
        if !last.is_inverse_of(first) {
            break;
        }
        head.pop();
        rest = &rest[1..];
    }
    head.extend_from_slice(rest);
    Ok((false, BraidWord::new(n, head)?))
}

/// Appends the p−1 components contributed by one letter, starting at slot `time`.
fn letter_block(letter: BraidLetter, p: usize, time: usize) -> Vec<SurgeryComponent> {
    let j = letter.index;
    match letter.sign {
        // u⁺: α_{p−1} earliest … α_1 latest, Legendrian surgery
        Sign::Pos => (1..p)
            .rev()
            .enumerate()
            .map(|(t, k)| SurgeryComponent { curve: CurveLabel::new(k, j), time: time + t, contact: ContactCoeff::Minus })
            .collect(),
        // u⁻: α_1 earliest … α_{p−1} latest, contact (+1)
        Sign::Neg => (1..p)
            .enumerate()
            .map(|(t, k)| SurgeryComponent { curve: CurveLabel::new(k, j), time: time + t, contact: ContactCoeff::Plus })
            .collect(),
    }
}

/// Ω_p(b): the surgery diagram of the p-fold cyclic branched cover.
pub fn build_diagram(b: &BraidWord, p: usize) -> Result<SurgeryDiagram> {
    let params = CoverParams::new(p, b.strands())?;
    let (_, remainder) = prefix_normalize(b)?;
    let mut components = Vec::with_capacity(remainder.len() * (p - 1));
    for (i, &letter) in remainder.letters().iter().enumerate() {
        components.extend(letter_block(letter, p, i * (p - 1)));
    }
    SurgeryDiagram::from_components(params, components)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SummandTag {
    /// A detached σ_k⁻² block: an overtwisted S³ summand.
    OvertwistedSphere { strand: usize, components: Vec<usize> },
    /// Isolated (+1) components from one σ_k⁻¹ letter: #_{count} S¹×S².
    S1xS2 { strand: usize, count: usize, components: Vec<usize> },
}

/// Finds detached u^ot blocks and detached u⁻ blocks in the linking graph.
pub fn detect_special_blocks(d: &SurgeryDiagram) -> Vec<SummandTag> {
    let p = d.params.p;
    let mut tags = Vec::new();
    let mut isolated_by_letter: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for block in d.blocks() {
        let comps: Vec<&SurgeryComponent> = block.iter().map(|&i| &d.components[i]).collect();
        if !comps.iter().all(|c| c.contact == ContactCoeff::Plus) {
            continue;
        }
        if block.len() == 1 {
            isolated_by_letter.entry(d.letter_of(comps[0])).or_default().push(block[0]);
            continue;
        }
        let strand = comps[0].curve.strand;
        if block.len() != 2 * (p - 1) || comps.iter().any(|c| c.curve.strand != strand) {
            continue;
        }
        // exactly two consecutive σ_k⁻¹ letters
        let letters: Vec<usize> = comps.iter().map(|c| d.letter_of(c)).collect();
        let first = letters[0];
        let two_letters = letters.iter().all(|&l| l == first || l == first + 1)
            && letters.iter().filter(|&&l| l == first).count() == p - 1;
        if two_letters {
            tags.push(SummandTag::OvertwistedSphere { strand, components: block });
        }
    }
    for (_, comps) in isolated_by_letter {
        if comps.len() == p - 1 {
            let strand = d.components[comps[0]].curve.strand;
            tags.push(SummandTag::S1xS2 { strand, count: p - 1, components: comps });
        }
    }
    tags.sort_by_key(|t| match t {
        SummandTag::OvertwistedSphere { components, .. } | SummandTag::S1xS2 { components, .. } => components[0],
    });
    tags
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Json,
    Dot,
}

impl std::str::FromStr for ExportFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ExportFormat::Json),
            "dot" => Ok(ExportFormat::Dot),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

pub fn export_diagram(d: &SurgeryDiagram, format: ExportFormat) -> Result<String> {
    match format {
        ExportFormat::Json => Ok(serde_json::to_string_pretty(d)?),
        ExportFormat::Dot => Ok(to_dot(d)),
    }
}

pub fn parse_diagram_json(text: &str) -> Result<SurgeryDiagram> {
    Ok(serde_json::from_str(text)?)
}

fn to_dot(d: &SurgeryDiagram) -> String {
    let mut out = String::from("graph surgery {\n");
    for (i, c) in d.components.iter().enumerate() {
        let _ = writeln!(
            out,
            "  c{i} [label=\"a{}^{} t={} ({:+}) fr={}\"];",
            c.curve.sheet,
            c.curve.strand,
            c.time,
            c.contact.value(),
            c.smooth_framing()
        );
    }
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let v = d.linking[i][j];
            if v != 0 {
                let _ = writeln!(out, "  c{i} -- c{j} [label=\"{v:+}\"];");
            }
        }
    }
    out.push_str("}\n");
    out
}
