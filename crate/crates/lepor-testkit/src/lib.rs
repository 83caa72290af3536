//! Test-only oracles and input generators shared by the lepor test
//! suites.
//!
//! Every oracle here is a deliberately independent reimplementation of a
//! rule the library also implements, written from the rule statement with
//! different structure (explicit candidate lists, float comparisons,
//! linear scans) so that a coding slip on either side shows up as a
//! disagreement.

pub mod gen;
pub mod oracle;
