//! Bounded verification of the example of a finitely generated Rees algebra
//! whose initial algebra is not finitely generated.

mod claims;
mod table;

pub use claims::{
    initial_algebra_census, verify_claim1, verify_claim2, CensusEntry, CensusReport, Claim1Entry, Claim1Report,
    Claim2Entry, Claim2Report,
};
pub use table::BigradedAlgebraTable;
