//! Many analyses at once. With the `parallel` feature the work is spread
//! over rayon's pool; results always come back in input order.

use crate::braid::BraidWord;
use crate::error::Result;
use crate::invariants::{analyze, compare, ComparisonVerdict, InvariantReport};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// `items.iter().map(f)`, spread over the thread pool when `parallel` is on.
/// Output order always follows input order.
#[cfg(feature = "parallel")]
pub fn map_ordered<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_ordered<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    items.iter().map(f).collect()
}

pub fn analyze_many_sequential(jobs: &[(BraidWord, usize)]) -> Vec<Result<InvariantReport>> {
    jobs.iter().map(|(b, p)| analyze(b, *p)).collect()
}

pub fn compare_many_sequential(jobs: &[(BraidWord, BraidWord, usize)]) -> Vec<Result<ComparisonVerdict>> {
    jobs.iter().map(|(l, r, p)| compare(l, r, *p)).collect()
}

pub fn analyze_many(jobs: &[(BraidWord, usize)]) -> Vec<Result<InvariantReport>> {
    map_ordered(jobs, |(b, p)| analyze(b, *p))
}

pub fn compare_many(jobs: &[(BraidWord, BraidWord, usize)]) -> Vec<Result<ComparisonVerdict>> {
    map_ordered(jobs, |(l, r, p)| compare(l, r, *p))
}
