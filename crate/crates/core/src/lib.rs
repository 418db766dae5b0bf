//! Radially maximal graphs.
//!
//! A graph is radially maximal when it is not complete and adding any
//! missing edge lowers its radius. This crate builds such graphs for every
//! feasible radius/diameter/order triple, decides radial maximality with
//! checkable witness certificates, and enumerates small labeled graphs to
//! test the radius/diameter bound and minimum-order claims exhaustively.

pub mod constructions;
pub mod formats;
pub mod graph;
pub mod maximality;
pub mod search;

pub use constructions::{
    build_H, build_radially_maximal, build_self_centered, extend, lemma1_precondition, ConstructionError,
    ConstructionParams, Feasibility, LabeledConstruction,
};
pub use formats::{Format, FormatError};
pub use graph::{EccentricityProfile, Graph, GraphError, INFINITE, MAX_ORDER};
pub use maximality::{
    certificate, is_radially_maximal, verify_H_witnesses, CertificateEntry, MaximalityCertificate,
    MaximalityError, WitnessReport,
};
pub use search::{
    check_bound_all, check_bound_all_sharded, enumerate_labeled, min_order_nonselfcentered,
    min_order_nonselfcentered_sharded, SearchError, SearchReport, ShardSpec,
};
