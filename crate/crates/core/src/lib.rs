//! Maximum triangle counts for graphs with a fixed number of edges, the
//! graphs attaining them, a brute-force enumeration oracle that checks both,
//! and Schur multiplier bounds for p-groups derived from the triangle bound.

pub mod canon;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod schur;

pub use canon::{canonical_form, CanonicalForm};
pub use extremal::{
    build_extremal, choose2_inequality_holds, max_triangles, maximizer_catalogue, rivin_bound,
    triangular_decompose, Choose2Outcome, ExtremalShape, TriangularDecomposition,
};
pub use graph::{
    attach_fan, complete_graph, contract_pair, disjoint_union, Graph, GraphError, OpenTriple,
};
pub use oracle::{
    enumerate_max, verify_characterization, verify_rivin_average, EnumerationConfig,
    EnumerationMode, EnumerationTask, MaximizerReport,
};
pub use schur::{BoundReport, GroupProfile};
