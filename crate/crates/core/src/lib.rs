//! Deciding connected-homomorphism-homogeneity of finite graphs.
//!
//! A graph is C-XY, for map classes X and Y among isomorphisms (I),
//! monomorphisms (M) and homomorphisms (H), when every X-map from a finite
//! connected induced subgraph into the graph extends to a Y-map of the whole
//! graph into itself (an automorphism when Y is I, an endomorphism when Y is H).
//!
//! Membership is decided two ways:
//!
//! * [`oracle`] follows the definition, searching every source subgraph and
//!   every map out of it;
//! * [`recognizers`] use the known structural classifications of the C-II,
//!   C-MI, C-HI and C-HH graphs.
//!
//! ```
//! use homhom::{families::Family, oracle, recognizers, ClassQuery, MorphKind};
//!
//! let c6 = Family::Cycle { n: 6 }.make().unwrap();
//! assert!(recognizers::is_cmi(&c6));
//! let q = ClassQuery::connected(MorphKind::Homo, MorphKind::Iso);
//! assert!(!oracle::is_c_xy(&c6, q, &oracle::OracleConfig::default()).unwrap().holds());
//! ```

pub mod error;
pub mod families;
pub mod graph;
pub mod morphisms;
pub mod oracle;
pub mod recognizers;
pub mod report;
mod search;

#[cfg(doctest)]
mod book;

pub use error::{Error, Result};
pub use graph::{Bipartition, Graph, VertexSet};
pub use morphisms::{MorphKind, PartialMap};
pub use oracle::{ClassQuery, Witness};
