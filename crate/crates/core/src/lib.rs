//! Fractional `[1, k + 1/2]`-factors and component factors of graphs.
//!
//! A graph `G` has a fractional `[1, k + 1/2]`-factor exactly when removing
//! any vertex set `S` leaves at most `(k + 1/2)|S|` isolated vertices. This
//! crate decides both sides of that statement, turns a fractional factor
//! into a spanning subgraph whose components come from a small tree family,
//! and checks the result independently.
//!
//! ```
//! use factorsmith::{check_iso_condition, extract_component_factor, Graph, Ratio};
//!
//! let c7 = Graph::cycle(7);
//! assert!(check_iso_condition(&c7, Ratio::k_plus_half(1))?.is_none());
//!
//! let found = extract_component_factor(&c7, 1)?.expect("C7 has a factor");
//! let mut classes: Vec<String> = found.certificate.classes().iter().map(|c| c.to_string()).collect();
//! classes.sort();
//! assert_eq!(classes, ["P2", "P5"]);
//! # Ok::<(), factorsmith::Error>(())
//! ```
//!
//! The guide in `book/` walks through each piece.

pub mod conditions;
pub mod corpus;
pub mod error;
pub mod families;
pub mod formats;
pub mod fractional;
pub mod gf;
pub mod graph;
pub mod matching;
pub mod ratio;
pub mod reducer;
pub mod report;

pub use conditions::{
    check_iso_condition, iso_after_removal, isolated_toughness, ConditionWitness, Toughness,
};
pub use error::{Error, Result};
pub use families::{classify_component, ComponentClass, Family};
pub use fractional::{find_fractional_factor, verify_fractional, HalfIntegralAssignment};
pub use gf::{find_gf_factor, gf_condition_witness, DegreeBounds, GfEngine};
pub use graph::{Edge, Graph, MultiGraph, VertexSet};
pub use ratio::Ratio;
pub use reducer::{
    extract_component_factor, minimize, verify_certificate, Color, ColoredFactor, FactorCertificate,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/conditions.md")]
    mod conditions {}
    #[doc = include_str!("../../../book/src/fractional.md")]
    mod fractional {}
    #[doc = include_str!("../../../book/src/component-factors.md")]
    mod component_factors {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
