//! Simulation and verification toolkit for the diffusion game: every vertex
//! of a graph simultaneously sends one chip to each strictly poorer
//! neighbour. The crate provides the exact firing dynamics, minimal
//! pre-period/period detection with the property-plus tightness certificate,
//! closed-form oracles for the analysed graph families, and exhaustive
//! state-space exploration over bounded configuration windows.
//!
//! ```
//! use diffusion_core::{detect_period, fire, full_degree_config, Graph};
//!
//! let g = Graph::path(9)?;
//! let c0 = full_degree_config(&g);
//! assert_eq!(c0.values(), &[1, 2, 2, 2, 2, 2, 2, 2, 1]);
//!
//! let report = detect_period(&g, &c0, 1_000)?.expect_periodic();
//! assert_eq!((report.pre_period, report.period), (3, 2));
//! # Ok::<(), diffusion_core::Error>(())
//! ```

pub mod dynamics;
pub mod error;
pub mod graph;
pub mod oracles;
pub mod periodicity;
pub mod state_graph;

pub use dynamics::{delta, fire, shift, trajectory, ChipConfiguration, DeltaVector};
pub use error::{Error, Result};
pub use graph::{Family, Graph, GraphMetrics, LayerDecomposition, TwinKind};
pub use oracles::{
    check_bound, complete_two_value_predict, full_degree_config, millpond_config,
    millpond_predict, path_full_degree_predict, path_meet_time, qf_config, star_preperiod_bound,
    BoundId, BoundReport, Violation,
};
pub use periodicity::{
    detect_period, first_property_plus_time, has_property_plus, is_fixed, Classification,
    Detection, PeriodReport, DEFAULT_BUDGET,
};
pub use state_graph::{
    build_state_graph, cycle_census, enumerate_window, parents_of, ConfigWindow, CycleCensus,
    StateGraphReport, DEFAULT_NODE_CAP,
};
