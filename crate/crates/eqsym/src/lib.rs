//! Exact calculus of double forest polynomials, double Schubert polynomials
//! and equivariantly quasisymmetric polynomials.

pub mod error;
pub mod forest;
pub mod noncrossing;
pub mod poly;
pub mod star;
pub mod symgroup;
pub mod tables;
pub mod vine;

pub use error::{Error, Result};
pub use forest::{forest_of_word, IndexedForest, PaddedComposition};
pub use poly::{parse_poly, DepletedAlphabet, ExactPolynomial, Poly, Var};
pub use symgroup::Permutation;
pub use noncrossing::NoncrossingPerm;
pub use vine::{forest_poly, schubert_poly, LongWord, Subword};
