//! Overlapping temporal communities in link streams by clique percolation.
//!
//! A link stream is a set of links `(b, e, u, v)`: vertices `u` and `v`
//! interact over the closed interval `[b, e]`. The crate
//!
//! 1. enumerates the maximal k-cliques of a stream in a single chronological
//!    pass ([`kclique`]),
//! 2. percolates them through a union-find whose `(k - 1)`-clique
//!    memberships carry time intervals ([`percolation`]), and
//! 3. turns the result into temporal communities, each a set of vertices
//!    with presence intervals ([`community`]).
//!
//! ```
//! use lscpm::{parse_durational, pipeline, LinkStream};
//!
//! let stream: LinkStream = parse_durational("0 10 a b\n0 10 b c\n2 8 a c\n").unwrap();
//! let communities = pipeline::communities(&stream, 3, pipeline::Mode::SingleThread).unwrap();
//! assert_eq!(communities.len(), 1);
//! assert_eq!(communities[0].vertex_count(), 3);
//! ```
//!
//! [`oracle`] holds slow reference implementations used for verification.

pub mod community;
pub mod compare;
pub mod error;
pub mod kclique;
pub mod oracle;
pub mod percolation;
pub mod pipeline;
pub mod stats;
pub mod stream;
pub mod sweep;
pub mod synth;
pub mod time;
pub mod unionfind;
pub mod window;

pub use community::{materialize, TemporalCommunity};
pub use compare::{compare_communities, Comparison, Refinement};
pub use error::{Error, Result};
pub use kclique::{enumerate_k_cliques, KCliqueEnumerator, TemporalKClique};
pub use percolation::{run_lscpm, Membership, PercolationState, TimeUf};
pub use stream::{apply_delta, parse_durational, parse_links, Format, Link, LinkStream, VertexId, Violation};
pub use time::{Interval, RealTime, Tick, Time};
pub use unionfind::{NodeId, UnionFind};
pub use window::WindowGraph;
