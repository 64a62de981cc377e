//! Face counts of graphical zonotopes and the graph invariants behind them.
//!
//! The f-polynomial of the zonotope of a graph is computed three ways:
//! from the flats of the graphical matroid ([`zonotope::f_poly_flats`]),
//! by specializing the q-chromatic symmetric function
//! ([`zonotope::f_poly_main`]), and by sweeping the covectors of the
//! graphical arrangement ([`oracle::f_vector_oracle`]). All arithmetic is
//! exact.

pub mod chromatic;
pub mod combinat;
pub mod error;
pub mod flats;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod poly;
pub mod qsym;
pub mod random;
pub mod zonotope;

pub use error::{Error, Result};
pub use graph::{make_graph, Graph, VertexPartition};
pub use poly::IntPolynomial;
