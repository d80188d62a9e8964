//! Braid words on `n` strands and the syntactic operations on them.
//!
//! Text grammar: whitespace-separated tokens `s<k>` or `-s<k>`, each with an
//! optional `^<m>` power suffix (`m` may be negative). `-s2^3` is three copies
//! of σ₂⁻¹ and `s2^-3` is the same.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum Sign {
    Neg,
    Pos,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.value() as i8
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;
    fn try_from(v: i8) -> std::result::Result<Sign, String> {
        match v {
            1 => Ok(Sign::Pos),
            -1 => Ok(Sign::Neg),
            _ => Err(format!("sign must be +1 or -1, got {v}")),
        }
    }
}

/// σ_index or its inverse. `index` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BraidLetter {
    pub index: usize,
    pub sign: Sign,
}

impl BraidLetter {
    pub fn pos(index: usize) -> Self {
        BraidLetter { index, sign: Sign::Pos }
    }

    pub fn neg(index: usize) -> Self {
        BraidLetter { index, sign: Sign::Neg }
    }

    pub fn inverse(self) -> Self {
        BraidLetter { index: self.index, sign: self.sign.flip() }
    }

    pub fn is_inverse_of(self, other: BraidLetter) -> bool {
        self.index == other.index && self.sign != other.sign
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Pos => write!(f, "s{}", self.index),
            Sign::Neg => write!(f, "-s{}", self.index),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

#[derive(Deserialize)]
struct RawBraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl<'de> Deserialize<'de> for BraidWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawBraidWord::deserialize(d)?;
        BraidWord::new(raw.strands, raw.letters).map_err(serde::de::Error::custom)
    }
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self> {
        if strands < 1 {
            return Err(Error::TooFewStrands { strands, min: 1 });
        }
        for l in &letters {
            check_index(l.index, strands)?;
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn empty(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    /// σ₁σ₂…σ_{n−1}, the transverse unknot with sl = −1.
    pub fn base_unknot(strands: usize) -> Result<Self> {
        Self::new(strands, (1..strands).map(BraidLetter::pos).collect())
    }

    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        parse_braid(text, strands)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn n_plus(&self) -> usize {
        self.letters.iter().filter(|l| l.sign == Sign::Pos).count()
    }

    pub fn n_minus(&self) -> usize {
        self.letters.iter().filter(|l| l.sign == Sign::Neg).count()
    }

    /// Concatenation `self · other`; both must live on the same strand count.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::CertificateStrands { cert: other.strands, braid: self.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Group inverse: reversed order, every sign flipped.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// The same letters viewed on `strands` strands (must not drop any generator).
    pub fn with_strands(&self, strands: usize) -> Result<BraidWord> {
        BraidWord::new(strands, self.letters.clone())
    }

    /// Permutation induced on strand positions (0-based): `perm[i]` is where
    /// the strand entering at position `i` exits.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            at.swap(l.index - 1, l.index);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    /// Number of components of the closed braid.
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut count = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
            }
        }
        count
    }

    pub fn is_knot(&self) -> bool {
        self.closure_components() == 1
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

fn check_index(index: usize, strands: usize) -> Result<()> {
    if index == 0 || index >= strands {
        return Err(Error::IndexOutOfRange { index, strands });
    }
    Ok(())
}

pub fn parse_braid(text: &str, strands: usize) -> Result<BraidWord> {
    if strands < 1 {
        return Err(Error::TooFewStrands { strands, min: 1 });
    }
    let mut letters = Vec::new();
    for token in text.split_whitespace() {
        let malformed = |reason| Error::MalformedToken { token: token.to_string(), reason };
        let (negated, rest) = match token.strip_prefix('-') {
            Some(r) => (true, r),
            None => (false, token),
        };
        let rest = rest
            .strip_prefix('s')
            .or_else(|| rest.strip_prefix('σ'))
            .ok_or_else(|| malformed("expected `s<k>`"))?;
        let (index_text, power) = match rest.split_once('^') {
            Some((i, m)) => {
                let m: i64 = m.parse().map_err(|_| malformed("bad power"))?;
                (i, m)
            }
            None => (rest, 1),
        };
        if index_text.is_empty() || !index_text.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed("bad generator index"));
        }
        let index: usize = index_text.parse().map_err(|_| malformed("bad generator index"))?;
        check_index(index, strands)?;
        let positive = (power >= 0) != negated;
        let letter = if positive { BraidLetter::pos(index) } else { BraidLetter::neg(index) };
        letters.extend(std::iter::repeat_n(letter, power.unsigned_abs() as usize));
    }
    Ok(BraidWord { strands, letters })
}

impl FromStr for BraidLetter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let w = parse_braid(s, usize::MAX)?;
        match w.letters.as_slice() {
            [l] => Ok(*l),
            _ => Err(Error::MalformedToken { token: s.to_string(), reason: "expected one letter" }),
        }
    }
}

/// Self-linking number of the closed braid: n₊ − n₋ − n.
pub fn self_linking(b: &BraidWord) -> i64 {
    b.n_plus() as i64 - b.n_minus() as i64 - b.strands as i64
}

fn stabilize(b: &BraidWord, sign: Sign) -> BraidWord {
    let mut letters = b.letters.clone();
    letters.push(BraidLetter { index: b.strands, sign });
    BraidWord { strands: b.strands + 1, letters }
}

/// Adds a strand and appends σ_n. Preserves the transverse type.
pub fn positive_stabilize(b: &BraidWord) -> BraidWord {
    stabilize(b, Sign::Pos)
}

/// Adds a strand and appends σ_n⁻¹ (transverse stabilization, sl drops by 2).
pub fn negative_stabilize(b: &BraidWord) -> BraidWord {
    stabilize(b, Sign::Neg)
}

/// g · b · g⁻¹
pub fn conjugate(b: &BraidWord, g: BraidLetter) -> Result<BraidWord> {
    check_index(g.index, b.strands)?;
    let mut letters = Vec::with_capacity(b.len() + 2);
    letters.push(g);
    letters.extend_from_slice(&b.letters);
    letters.push(g.inverse());
    Ok(BraidWord { strands: b.strands, letters })
}

pub fn free_reduce(b: &BraidWord) -> BraidWord {
    let mut out: Vec<BraidLetter> = Vec::with_capacity(b.len());
    for &l in &b.letters {
        match out.last() {
            Some(&top) if top.is_inverse_of(l) => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    BraidWord { strands: b.strands, letters: out }
}

/// Free reduction followed by stripping inverse pairs across the ends, so the
/// result is reduced as a cyclic word.
pub fn cyclic_reduce(b: &BraidWord) -> BraidWord {
    let reduced = free_reduce(b);
    let letters = &reduced.letters;
    let (mut lo, mut hi) = (0, letters.len());
    while hi - lo >= 2 && letters[lo].is_inverse_of(letters[hi - 1]) {
        lo += 1;
        hi -= 1;
    }
    BraidWord { strands: b.strands, letters: letters[lo..hi].to_vec() }
}

/// Moves the first `shift` letters (mod length) to the end. Negative shifts
/// rotate the other way.
pub fn cyclic_rotate(b: &BraidWord, shift: i64) -> BraidWord {
    let mut letters = b.letters.clone();
    if !letters.is_empty() {
        let k = shift.rem_euclid(letters.len() as i64) as usize;
        letters.rotate_left(k);
    }
    BraidWord { strands: b.strands, letters }
}

pub fn reverse_word(b: &BraidWord) -> BraidWord {
    BraidWord { strands: b.strands, letters: b.letters.iter().rev().copied().collect() }
}

/// σ_j ↦ σ_{n−j}, signs kept.
pub fn flip_indices(b: &BraidWord) -> BraidWord {
    let n = b.strands;
    BraidWord {
        strands: n,
        letters: b.letters.iter().map(|l| BraidLetter { index: n - l.index, sign: l.sign }).collect(),
    }
}

pub fn is_positive(b: &BraidWord) -> bool {
    b.n_minus() == 0 && b.n_plus() >= 1
}

/// Smallest `i` such that σ_i⁻¹ occurs in the word and σ_i does not.
pub fn pure_negative_level(b: &BraidWord) -> Option<usize> {
    let mut pos = vec![false; b.strands];
    let mut neg = vec![false; b.strands];
    for l in &b.letters {
        match l.sign {
            Sign::Pos => pos[l.index] = true,
            Sign::Neg => neg[l.index] = true,
        }
    }
    (1..b.strands).find(|&i| neg[i] && !pos[i])
}

/// One factor w σ_k w⁻¹ of a quasipositive factorization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugateFactor {
    pub conjugator: BraidWord,
    pub generator: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasipositivityCertificate {
    pub strands: usize,
    pub factors: Vec<ConjugateFactor>,
}

impl QuasipositivityCertificate {
    /// The certificate with empty conjugators, one factor per letter.
    /// Exists only for positive words.
    pub fn trivial(b: &BraidWord) -> Option<Self> {
        if !is_positive(b) {
            return None;
        }
        let factors = b
            .letters
            .iter()
            .map(|l| ConjugateFactor { conjugator: BraidWord::empty(b.strands).unwrap(), generator: l.index })
            .collect();
        Some(QuasipositivityCertificate { strands: b.strands, factors })
    }

    /// ∏ w_i σ_{k_i} w_i⁻¹ as a plain word.
    pub fn product(&self) -> Result<BraidWord> {
        let mut letters = Vec::new();
        for f in &self.factors {
            if f.conjugator.strands != self.strands {
                return Err(Error::CertificateStrands { cert: f.conjugator.strands, braid: self.strands });
            }
            check_index(f.generator, self.strands)?;
            letters.extend_from_slice(&f.conjugator.letters);
            letters.push(BraidLetter::pos(f.generator));
            letters.extend(f.conjugator.inverse().letters);
        }
        BraidWord::new(self.strands, letters)
    }
}

/// Word-level check: the certificate product and `b` agree after cyclic
/// reduction, up to a rotation.
pub fn verify_quasipositive(b: &BraidWord, cert: &QuasipositivityCertificate) -> Result<bool> {
    if cert.strands != b.strands {
        return Err(Error::CertificateStrands { cert: cert.strands, braid: b.strands });
    }
    let target = cyclic_reduce(b).letters;
    let product = cyclic_reduce(&cert.product()?).letters;
    if target.len() != product.len() {
        return Ok(false);
    }
    if target.is_empty() {
        return Ok(true);
    }
    Ok((0..target.len()).any(|k| {
        target.iter().cycle().skip(k).take(target.len()).eq(product.iter())
    }))
}
