//! Built-in example braids with their known invariants.
//!
//! Families take integer parameters. An entry is either a single braid with
//! an expected partial report, or a pair whose invariants must agree.

use num_bigint::BigInt;
use serde::Serialize;

use crate::braid::{negative_stabilize, BraidWord};
use crate::error::{Error, Result};
use crate::invariants::{analyze, compare, smith_normal_form, Conclusion, Flag, InvariantReport, Rational};
use crate::openbook::{lift_monodromy, variation_matrix, CoverParams};
use crate::oracle::{h1_order_fox, FoxOrder};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Bm,
    Flype,
    Ngot,
    Torus,
    Lens,
    Unknot,
    Otsphere,
}

impl Family {
    pub const ALL: [Family; 7] =
        [Family::Bm, Family::Flype, Family::Ngot, Family::Torus, Family::Lens, Family::Unknot, Family::Otsphere];

    pub fn name(self) -> &'static str {
        match self {
            Family::Bm => "bm",
            Family::Flype => "flype",
            Family::Ngot => "ngot",
            Family::Torus => "torus",
            Family::Lens => "lens",
            Family::Unknot => "unknot",
            Family::Otsphere => "otsphere",
        }
    }

    pub fn parse(name: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| Error::UnknownFamily(name.to_string()))
    }

    /// Parameter sets used when none are given.
    pub fn defaults(self) -> Vec<Vec<i64>> {
        match self {
            Family::Bm => vec![vec![3, 2, 3], vec![5, 2, 3], vec![3, 2, 5]],
            Family::Flype => vec![vec![2], vec![3]],
            Family::Ngot => vec![vec![]],
            Family::Torus => vec![vec![2, 3], vec![2, 5], vec![3, 4], vec![3, 5]],
            Family::Lens => (1..=8).map(|k| vec![k]).collect(),
            Family::Unknot => (2..=5).map(|n| vec![n]).collect(),
            Family::Otsphere => vec![vec![2], vec![3]],
        }
    }

    fn arity(self) -> usize {
        match self {
            Family::Bm => 3,
            Family::Torus => 2,
            Family::Ngot => 0,
            _ => 1,
        }
    }

    pub fn usage(self) -> &'static str {
        match self {
            Family::Bm => "u,v,w",
            Family::Flype => "m",
            Family::Ngot => "(none)",
            Family::Torus => "strands,twists",
            Family::Lens => "k",
            Family::Unknot => "strands",
            Family::Otsphere => "strands",
        }
    }
}

/// Values a report must match. Fields left as None are not checked.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Expected {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sl: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h1_factors: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signature: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d3: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flag: Option<Flag>,
    /// Compare |H₁| with the Alexander-polynomial route (knots only).
    pub fox: bool,
    /// Compare H₁ with the open-book variation-map route.
    pub open_book: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EntryKind {
    Single { word: BraidWord, expected: Expected },
    Pair { left: BraidWord, right: BraidWord },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub family: Family,
    pub provenance: &'static str,
    pub kind: EntryKind,
}

const BM_CITE: &str = "Birman-Menasco negative flype 3-braids L1 = s1^u s2^v s1^w s2^-1, L2 = s1^u s2^-1 s1^w s2^v; \
     cyclic branched covers contactomorphic";
const FLYPE_CITE: &str = "special negative flype K1 = s1^m v s1^-1 w, K2 = s1^-1 v s1^m w with v = w = s2; \
     branched double covers contactomorphic";
const NGOT_CITE: &str = "Ng-Ozsvath-Thurston transverse push-offs of Legendrian pretzel knots \
     P(-4,-3,3) and P(-6,-3,-3); surgery links for the double covers Legendrian isotopic";
const TORUS_CITE: &str = "torus-link closures; covers are Brieskorn manifolds, |H1| by Fox's formula";
const LENS_CITE: &str = "s1^-k: (+1) contact surgery on k+1 push-offs of the tb=-1 unknot; \
     L(k,k-1) with sign(X) = k-1 and d3 = (3-k)/4, overtwisted";
const UNKNOT_CITE: &str = "base unknot s1...s(n-1): cover is (S3, xi_std), d3 = -1/2";
const OTSPHERE_CITE: &str = "negative stabilization of the base unknot: overtwisted S3 with d3 = -1/2 + (p-1)";

fn word(text: &str, strands: usize) -> BraidWord {
    BraidWord::parse(text, strands).expect("catalog words parse")
}

fn check_arity(family: Family, params: &[i64]) -> Result<()> {
    if params.len() != family.arity() {
        return Err(Error::BadParams(format!(
            "family {} takes {} parameter(s) ({}), got {}",
            family.name(),
            family.arity(),
            family.usage(),
            params.len()
        )));
    }
    Ok(())
}

fn positive(family: Family, v: i64, what: &str) -> Result<usize> {
    usize::try_from(v)
        .ok()
        .filter(|&x| x >= 1)
        .ok_or_else(|| Error::BadParams(format!("{}: {what} must be a positive integer, got {v}", family.name())))
}

fn power(index: usize, exp: i64) -> String {
    match exp {
        0 => String::new(),
        e => format!("s{index}^{e}"),
    }
}

fn join(parts: &[String]) -> String {
    parts.iter().filter(|s| !s.is_empty()).cloned().collect::<Vec<_>>().join(" ")
}

/// Entries of one family for one parameter set, at cover degree `p`.
pub fn entries(family: Family, params: &[i64], p: usize) -> Result<Vec<CatalogEntry>> {
    check_arity(family, params)?;
    let pair = |name: String, cite, l: BraidWord, r: BraidWord| CatalogEntry {
        name,
        family,
        provenance: cite,
        kind: EntryKind::Pair { left: l, right: r },
    };
    let single = |name: String, cite, w: BraidWord, expected| CatalogEntry {
        name,
        family,
        provenance: cite,
        kind: EntryKind::Single { word: w, expected },
    };
    let out = match family {
        Family::Bm => {
            let (u, v, w) = (params[0], params[1], params[2]);
            let l1 = join(&[power(1, u), power(2, v), power(1, w), "-s2".into()]);
            let l2 = join(&[power(1, u), "-s2".into(), power(1, w), power(2, v)]);
            vec![pair(format!("bm({u},{v},{w})"), BM_CITE, word(&l1, 3), word(&l2, 3))]
        }
        Family::Flype => {
            let m = params[0];
            let k1 = join(&[power(1, m), "s2 -s1 s2".into()]);
            let k2 = join(&["-s1 s2".into(), power(1, m), "s2".into()]);
            vec![pair(format!("flype(m={m})"), FLYPE_CITE, word(&k1, 3), word(&k2, 3))]
        }
        Family::Ngot => vec![
            pair(
                "ngot P(-4,-3,3) 4-braids".into(),
                NGOT_CITE,
                word("-s3 s2 s3 s1 s1 s3 -s2 s1 s2 -s1 -s1", 4),
                word("s3 s2 s1 -s3 s1 -s2 s1 s2 -s1 -s1 s3", 4),
            ),
            pair(
                "ngot P(-4,-3,3) rewritten 4-braids".into(),
                NGOT_CITE,
                word("s2 s1 s3 s3 s1 -s2 s3 s2 -s3 -s3 -s1", 4),
                word("s1 s2 s3 s3 -s1 -s2 s3 s2 -s3 -s3 s1", 4),
            ),
            pair(
                "ngot P(-6,-3,-3) 5-braids".into(),
                NGOT_CITE,
                word("-s4 s3 s4 s2 s1 s4 s2 s1 s2 -s3 s2 s3 -s2 -s1 -s2 -s1", 5),
                word("s4 s3 s2 s1 -s4 s2 s1 s2 -s3 s2 s3 -s2 -s1 -s2 -s1 s4", 5),
            ),
            pair(
                "ngot P(-6,-3,-3) rewritten 5-braids".into(),
                NGOT_CITE,
                word("s2 s1 s3 s4 s1 s3 s4 s3 -s2 s3 s2 -s3 -s4 -s3 -s4 -s1", 5),
                word("s1 s2 s3 s4 -s1 s3 s4 s3 -s2 s3 s2 -s3 -s4 -s3 -s4 s1", 5),
            ),
        ],
        Family::Torus => {
            let a = positive(family, params[0], "strands")?;
            if a < 2 {
                return Err(Error::BadParams("torus: strands must be at least 2".into()));
            }
            let b = positive(family, params[1], "twists")?;
            let base: Vec<String> = (1..a).map(|i| format!("s{i}")).collect();
            let text = vec![base.join(" "); b].join(" ");
            let w = word(&text, a);
            let knot = w.is_knot();
            let expected = Expected { flag: Some(Flag::SteinFillable), fox: knot, open_book: true, ..Default::default() };
            vec![single(format!("torus({a},{b})"), TORUS_CITE, w, expected)]
        }
        Family::Lens => {
            let k = positive(family, params[0], "k")? as i64;
            let mut expected = Expected { flag: Some(Flag::Overtwisted), open_book: true, ..Default::default() };
            if p == 2 {
                expected.h1_factors = Some(if k == 1 { vec![] } else { vec![k] });
                expected.signature = Some(k - 1);
                expected.d3 = Some(Rational::new(3 - k, 4));
            }
            vec![single(format!("lens(k={k})"), LENS_CITE, word(&format!("s1^-{k}"), 2), expected)]
        }
        Family::Unknot => {
            let n = positive(family, params[0], "strands")?;
            if n < 2 {
                return Err(Error::BadParams("unknot: strands must be at least 2".into()));
            }
            let w = BraidWord::base_unknot(n)?;
            let expected = Expected {
                sl: Some(-1),
                h1_factors: Some(vec![]),
                d3: Some(Rational::new(-1, 2)),
                flag: Some(Flag::SteinFillable),
                fox: true,
                open_book: true,
                ..Default::default()
            };
            vec![single(format!("unknot(n={n})"), UNKNOT_CITE, w, expected)]
        }
        Family::Otsphere => {
            let n = positive(family, params[0], "strands")?;
            if n < 2 {
                return Err(Error::BadParams("otsphere: strands must be at least 2".into()));
            }
            let w = negative_stabilize(&BraidWord::base_unknot(n)?);
            let expected = Expected {
                sl: Some(-3),
                h1_factors: Some(vec![]),
                signature: Some(0),
                d3: Some(Rational::new(2 * p as i64 - 3, 2)),
                flag: Some(Flag::Overtwisted),
                fox: true,
                open_book: true,
            };
            vec![single(format!("otsphere(n={})", n + 1), OTSPHERE_CITE, w, expected)]
        }
    };
    Ok(out)
}

/// Every family at its default parameters.
pub fn default_entries(p: usize) -> Vec<CatalogEntry> {
    Family::ALL
        .into_iter()
        .flat_map(|f| f.defaults().into_iter().map(move |ps| (f, ps)))
        .flat_map(|(f, ps)| entries(f, &ps, p).expect("default parameters are valid"))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub what: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntryOutcome {
    pub name: String,
    pub family: &'static str,
    pub p: usize,
    pub provenance: &'static str,
    pub pass: bool,
    pub checks: Vec<CheckLine>,
}

fn line(what: &str, expected: impl ToString, actual: impl ToString) -> CheckLine {
    let (expected, actual) = (expected.to_string(), actual.to_string());
    CheckLine { what: what.into(), pass: expected == actual, expected, actual }
}

fn factors_string(v: &[BigInt]) -> String {
    format!("{v:?}")
}

fn single_checks(w: &BraidWord, p: usize, exp: &Expected, r: &InvariantReport) -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();
    if let Some(sl) = exp.sl {
        out.push(line("sl", sl, r.sl));
    }
    if let Some(h) = &exp.h1_factors {
        let want: Vec<BigInt> = h.iter().map(|&x| BigInt::from(x)).collect();
        out.push(line("H1 factors", factors_string(&want), factors_string(&r.h1_factors)));
        out.push(line("b1", 0, r.b1));
    }
    if let Some(s) = exp.signature {
        out.push(line("signature", s, r.signature));
    }
    if let Some(d) = &exp.d3 {
        out.push(line("d3", d, &r.d3));
    }
    if let Some(f) = exp.flag {
        let actual: Vec<&str> = r.flags.iter().map(|f| f.as_str()).collect();
        out.push(line("flag", f.as_str(), actual.join(",")));
    }
    if exp.fox && w.is_knot() {
        let fox = match h1_order_fox(w, p)? {
            FoxOrder::Finite(n) => n.to_string(),
            FoxOrder::Infinite => "infinite".into(),
        };
        let snf = r.h1_order().map_or_else(|| "infinite".to_string(), |n| n.to_string());
        out.push(line("|H1| vs Fox", fox, snf));
    }
    if exp.open_book {
        let params = CoverParams::new(p, w.strands())?;
        let var = smith_normal_form(&variation_matrix(&lift_monodromy(w, p)?, params)?);
        let via_open_book = format!("{} b1={}", factors_string(&var.factors), var.corank);
        let via_surgery = format!("{} b1={}", factors_string(&r.h1_factors), r.b1);
        out.push(line("H1 vs open book", via_open_book, via_surgery));
    }
    Ok(out)
}

fn run_entry(entry: &CatalogEntry, p: usize) -> Result<EntryOutcome> {
    let checks = match &entry.kind {
        EntryKind::Single { word, expected } => single_checks(word, p, expected, &analyze(word, p)?)?,
        EntryKind::Pair { left, right } => {
            let v = compare(left, right, p)?;
            let agree = matches!(v.conclusion, Conclusion::InvariantsAgree | Conclusion::ContactomorphicIfOvertwisted);
            vec![
                line("sl", v.left.sl, v.right.sl),
                line("H1", v.left.h1_string(), v.right.h1_string()),
                line("d3", &v.left.d3, &v.right.d3),
                line("verdict", "agree", if agree { "agree" } else { "distinguish" }),
            ]
        }
    };
    Ok(EntryOutcome {
        name: entry.name.clone(),
        family: entry.family.name(),
        p,
        provenance: entry.provenance,
        pass: checks.iter().all(|c| c.pass),
        checks,
    })
}

/// Runs all (entry, p) combinations. Output follows input order.
pub fn run(jobs: &[(CatalogEntry, usize)]) -> Vec<Result<EntryOutcome>> {
    crate::batch::map_ordered(jobs, |(e, p)| run_entry(e, *p))
}

/// Parses "N" or "a..b" (inclusive).
pub fn parse_p_range(text: &str) -> Result<Vec<usize>> {
    let bad = || Error::BadParams(format!("cover degree must be N or A..B, got {text:?}"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let range = match text.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.trim_start_matches('='))?,
        None => num(text)?..=num(text)?,
    };
    let v: Vec<usize> = range.collect();
    if v.is_empty() {
        return Err(bad());
    }
    Ok(v)
}

pub fn parse_params(text: &str) -> Result<Vec<i64>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| s.trim().parse::<i64>().map_err(|_| Error::BadParams(format!("not an integer: {s:?}"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_one(f: Family, params: &[i64], p: usize) -> Vec<EntryOutcome> {
        let jobs: Vec<_> = entries(f, params, p).unwrap().into_iter().map(|e| (e, p)).collect();
        run(&jobs).into_iter().map(|r| r.unwrap()).collect()
    }

    #[test]
    fn family_names_roundtrip() {
        for f in Family::ALL {
            assert_eq!(Family::parse(f.name()).unwrap(), f);
        }
        assert!(matches!(Family::parse("nope"), Err(Error::UnknownFamily(_))));
    }

    #[test]
    fn bm_words() {
        let e = &entries(Family::Bm, &[3, 2, 3], 2).unwrap()[0];
        let EntryKind::Pair { left, right } = &e.kind else { panic!() };
        assert_eq!(left.to_string(), "s1 s1 s1 s2 s2 s1 s1 s1 -s2");
        assert_eq!(right.to_string(), "s1 s1 s1 -s2 s1 s1 s1 s2 s2");
    }

    #[test]
    fn flype_words() {
        let e = &entries(Family::Flype, &[2], 2).unwrap()[0];
        let EntryKind::Pair { left, right } = &e.kind else { panic!() };
        assert_eq!(left.to_string(), "s1 s1 s2 -s1 s2");
        assert_eq!(right.to_string(), "-s1 s2 s1 s1 s2");
    }

    #[test]
    fn defaults_pass_at_p2() {
        let jobs: Vec<_> = default_entries(2).into_iter().map(|e| (e, 2)).collect();
        for out in run(&jobs) {
            let out = out.unwrap();
            assert!(out.pass, "{}: {:?}", out.name, out.checks);
        }
    }

    #[test]
    fn torus_fox_table() {
        for p in 2..=5 {
            let out = &run_one(Family::Torus, &[2, 3], p)[0];
            assert!(out.pass, "p={p}: {:?}", out.checks);
            assert!(out.checks.iter().any(|c| c.what == "|H1| vs Fox"));
        }
    }

    #[test]
    fn bad_params() {
        assert!(matches!(entries(Family::Bm, &[1, 2], 2), Err(Error::BadParams(_))));
        assert!(matches!(entries(Family::Lens, &[0], 2), Err(Error::BadParams(_))));
        assert_eq!(parse_p_range("2..5").unwrap(), vec![2, 3, 4, 5]);
        assert_eq!(parse_p_range("3").unwrap(), vec![3]);
        assert!(parse_p_range("5..2").is_err());
        assert_eq!(parse_params("3, 2,3").unwrap(), vec![3, 2, 3]);
    }
}
