//! Decide, construct and independently verify intersection patterns of two
//! or three embedded spheres in 3-space.
//!
//! Every intersection circle of two spheres separates each of them, so the
//! regions of a sphere form a tree whose vertex degrees count the circles on
//! each region's boundary. A pattern is a tuple of such degree sequences.
//! This crate decides which tuples occur, builds certificates for the ones
//! that do, and checks certificates without trusting the builder.
//!
//! * [`seqcore`]: degree sequences and their arithmetic.
//! * [`dualtree`]: region trees, numberings, Prüfer enumeration.
//! * [`sketch`]: the nested-circle picture of a single sequence.
//! * [`pair_engine`]: two spheres.
//! * [`triple_engine`]: three spheres.
//! * [`oracle`]: brute-force oracles and exhaustive sweeps.
//! * [`meshlab`]: exact rectilinear meshes realizing a diagonal pair.
//!
//! Sweeps run on rayon when the `parallel` feature is on (the default) and
//! can always be forced sequential through [`Exec`].

pub mod dualtree;
pub mod error;
pub mod exec;
pub mod meshlab;
pub mod oracle;
pub mod pair_engine;
pub mod seqcore;
pub mod sketch;
pub mod triple_engine;

pub use error::{Error, Result, Verdict};
pub use exec::Exec;
pub use pair_engine::{decide_pair, realize_pair, verify_pair_certificate, PairCertificate};
pub use seqcore::DegreeSequence;
pub use triple_engine::{decide_triple, realize_triple, verify_triple_certificate, TripleCertificate};
