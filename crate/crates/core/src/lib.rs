//! Cyclic branched covers of transverse braid closures: lifted open books,
//! contact (±1) surgery diagrams, and the invariants read off them.

pub mod batch;
pub mod braid;
pub mod cli;
pub mod error;
pub mod invariants;
pub mod matrix;
pub mod openbook;
pub mod oracle;
pub mod surgery;

pub use braid::{parse_braid, BraidLetter, BraidWord, QuasipositivityCertificate, Sign};
pub use error::{Error, Result};
pub use invariants::{analyze, analyze_with, compare, ComparisonVerdict, Conclusion, Flag, InvariantReport, Rational};
pub use openbook::{lift_monodromy, CoverParams, TwistWord};
pub use surgery::{build_diagram, SurgeryDiagram};
