//! Necklaces, ornaments and banners, and the bijections relating them to
//! compatible pairs and to each other.

pub mod gamma;
pub mod involutions;
pub mod maps;
pub mod objects;
pub mod verify;
pub mod words;

pub use gamma::{gamma, gamma_inverse, in_b0};
pub use involutions::{involution_complement, involution_complement_banner, involution_swap_values, swap_necklace};
pub use maps::{banner_to_ornament, gr_eta, gr_phi, ornament_to_banner};
pub use objects::{banners, compatible_pairs, necklaces, ornaments, Banner, CompatiblePair, Necklace, Ornament};
pub use verify::{
    bijection_fixtures, verify_banner_ornament, verify_gamma, verify_involutions, verify_phi_eta, verify_weight_sums,
    weight_sum, WeightKind,
};
pub use words::{increasing_factorize, is_lyndon, lyndon_factorize, lyndon_type};
