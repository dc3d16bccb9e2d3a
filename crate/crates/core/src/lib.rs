//! Exact tools for the deduction game on graphs.
//!
//! Searchers are placed on the vertices of a graph. A searcher moves at most
//! once, and only when it can work out where to go without talking to
//! searchers on other vertices: the searchers on a vertex move out once there
//! are at least as many of them as unprotected neighbours, one to each. The
//! layout wins if every vertex ends up protected. The deduction number
//! `d(G)` is the fewest searchers in a winning layout.
//!
//! * [`graph`]: graphs, edge-list I/O, families, products, metrics.
//! * [`engine`]: the game itself, terminal layouts and the stem transform.
//! * [`solver`]: bounds and exact `d(G)` by exhaustive search.
//! * [`families`]: closed forms and explicit optimal layouts.
//! * [`pruning`]: the linear-time tree algorithm.
//! * [`dynamics`]: orbits of the terminal-layout map.
//!
//! ```
//! use deduct_core::graph::{generate, FamilySpec};
//! use deduct_core::solver::solve;
//!
//! let c8 = generate(&FamilySpec::Cycle(8)).unwrap();
//! let r = solve(&c8);
//! assert_eq!(r.d, 4);
//! assert_eq!(r.witness.to_string(), "0,1,3,5");
//! ```
//!
//! The `book/` directory at the repository root walks through the concepts;
//! its code samples are compiled and run as doc-tests of this crate.

pub mod dynamics;
pub mod engine;
pub mod families;
pub mod graph;
pub mod layout;
pub mod pruning;
pub mod report;
pub mod solver;

pub use engine::{simulate, GameTrace};
pub use graph::{Graph, Vertex};
pub use layout::Layout;
pub use solver::{solve, SolveResult};

#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $file:literal) => {
            #[doc = include_str!(concat!("../../../book/src/", $file))]
            mod $name {}
        };
    }

    chapter!(introduction, "introduction.md");
    chapter!(graphs, "graphs.md");
    chapter!(game, "game.md");
    chapter!(bounds, "bounds.md");
    chapter!(solving, "solving.md");
    chapter!(families, "families.md");
    chapter!(trees, "trees.md");
    chapter!(dynamics, "dynamics.md");
    chapter!(cli, "cli.md");
}
