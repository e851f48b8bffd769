//! Local views (configurations) of a vertex in a cubic graph: the first and
//! second neighborhood structure together with external-coverage marks, the
//! exact partition functions and neighbor statistics of each view, and
//! extraction of views from concrete graphs.

mod config;
mod enumerate;
mod extract;
mod functions;

pub use config::{config_from_counts, Configuration, GirthClass, LocalViewError};
pub use enumerate::enumerate_configurations;
pub use extract::{configuration_distribution, extract_configuration, DISTRIBUTION_MAX_VERTICES};
pub use functions::{ConfigFunctions, Side};
