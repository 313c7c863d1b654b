//! Search procedures: Hamiltonian cycles of leaper graphs, Hamiltonian
//! paths of small grids, and spanning cycle covers.

mod grid_path;
mod search;
mod two_factor;

pub use grid_path::{export_grid_cache, grid_ham_path_between, import_grid_cache, is_ham_path, Cell};
pub use search::{ham_cycle_search, SearchConfig};
pub use two_factor::{two_factor, two_factor_with};
