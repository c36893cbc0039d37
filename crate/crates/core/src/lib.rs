//! Sign-permutation actions of the symmetric group on tensor powers of a
//! `Z/2`-graded space, and exact verification of the structure of their
//! centralizer algebras over `S_n` and `A_n`.

pub mod asymptotics;
pub mod exact_linalg;
pub mod partitions;
pub mod schur_centralizers;
pub mod sn_characters;
pub mod super_action;
