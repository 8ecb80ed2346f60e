//! Restricted `N`-point theory: grid matrices, the weighted bilinear form,
//! adjoints, the `tau` transformation and discrete biorthogonality.

mod grid;
mod matrix;
mod verify;

pub use grid::{
    adjoint, make_grid_rep, shift_matrix, t_minus_adjoint_closed_form, t_plus_adjoint_closed_form,
    tau_b, tau_function, tau_matrix, x_matrix, x_star_closed_form, y_matrix, y_star_closed_form,
    GridRep,
};
pub use matrix::{GridFunction, Matrix};
pub use verify::{
    adjoint_solution, verify_adjoint_gevp, verify_adjoints, verify_biorthogonality,
    BiorthogonalityReport,
};
