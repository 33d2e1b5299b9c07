//! Exact element-order statistics of finite permutation groups.
//!
//! For a finite group `G`, `ψ(G)` is the sum of the orders of its elements
//! and `o(G) = ψ(G)/|G|` its average order. The crate builds groups from
//! small recipes (`C(n)`, `S(n)`, `SD(q,r)`, products, explicit
//! generators), counts element orders exactly, decides solvability and
//! nilpotency, and runs checks and searches over a catalog of every group
//! of order at most 23.
//!
//! ```
//! use avgorder::{average_order, order_census, realize};
//!
//! let s3 = realize(&"S(3)".parse().unwrap()).unwrap();
//! let o = average_order(&order_census(&s3).unwrap());
//! assert_eq!(o.to_string(), "13/6");
//! ```

pub mod analysis;
pub mod arith;
pub mod catalog;
pub mod census;
pub mod cli;
pub mod error;
pub mod perm;
pub mod rational;
pub mod recipe;
pub mod report;
pub mod structure;
pub mod suite;

pub use catalog::{Catalog, CatalogEntry};
pub use census::{average_order, order_census, psi, psi_cyclic, psi_elem_power, psi_ratios, AnalysisReport, OrderCensus};
pub use error::{Error, Result};
pub use perm::{FiniteGroup, Permutation, MAX_GROUP_SIZE};
pub use rational::{rat, ExactRational};
pub use recipe::{parse_recipe, realize, GroupRecipe};
