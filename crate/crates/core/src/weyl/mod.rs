//! The graded Weyl algebra `A = k<x, y>/(xy - yx - 1)` and its bridge to `C`.

pub mod algebra;
pub mod bimodule;
pub mod bring;
pub mod dictionary;
pub mod iota;

pub use algebra::{monomial_product, z_left_action, WeylElem};
pub use bimodule::PElem;
pub use bring::{b_from_c, c_from_b, BElem};
pub use dictionary::{
    a_act_simple, a_act_word, a_tensor_simple, bridge_autoequiv, ext1_dim_a,
    match_simple_a_to_c, match_simple_c_to_a, translate_generator, AGenerator, ASimple,
    word_table, ActionTable,
};
pub use iota::{iota_component, iota_ideal};
