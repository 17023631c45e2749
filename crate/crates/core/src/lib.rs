//! Exact q-series engine for residue-class bias partition functions.

pub mod asymptotics;
pub mod bias;
pub mod error;
pub mod identities;
pub mod numeric;
pub mod oracle;
pub mod par;
pub mod qfunc;
pub mod ring;
pub mod series;
pub mod truncated;

pub use error::{Error, Result};
pub use par::Exec;
pub use series::Series;
pub use truncated::{CoefficientValue, Domain, TruncatedSeries};
