//! Constructions of perfect, distributing and fractal hash families.

mod blackburn;
mod coloring;
mod product;
mod recipes;

pub use blackburn::{
    blackburn_compose, check_fractal, composed_parts, varbb_extend, FractalIngredient, Placement,
    Validation, FRACTAL_SAMPLES, FRACTAL_SEED,
};
pub use coloring::{konig_edge_color, BipartiteColoring};
pub use product::{append_distinct_rows, dhhf3, easy_product, extend_strength};
pub use recipes::{
    best_factor_pair, construct_52, construct_d1, construct_dgen, construct_dn1, construct_dn2,
    construct_dn3, construct_dn4, construct_dn5, dgen_width_bound, dn3_covering, ingredient_parts,
    l52_covering, two_row_grid, RowExtension,
};
