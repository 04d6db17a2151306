//! Test functions, their Laplace and Fricke transforms, and the series side
//! of `L_f(φ)`.

mod lvalue;
mod testfn;

pub use lvalue::{
    functional_equation_sides, l_star, l_star_with, l_tilde, l_tilde_with, l_value,
    l_value_by_vertical_integral, l_value_by_vertical_integral_with, l_value_with,
    FunctionalEquationSides, LValue,
};
pub use testfn::{
    fricke_transform_testfn, fricke_value, laplace_phi_sw, laplace_phi_sw_with, AnalyticSeed,
    TestFunction,
};
