//! Character groups of elliptic maximal tori in finite reductive groups,
//! brute-force searches for characters in general position that are
//! conjugate self-dual, and the existence rules for (self-dual) cuspidal
//! and depth-zero supercuspidal representations built on top of them.

pub mod lattice;
pub mod par;
pub mod rootdata;
pub mod weyl;
pub mod toruschar;
pub mod classical;
pub mod existence;
pub mod padic;
