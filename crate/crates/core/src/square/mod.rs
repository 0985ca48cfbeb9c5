//! Hopf 2-actions, crossed squares, 2-fold split epimorphisms and cat²-Hopf
//! algebras, with the constructions relating them.

mod cat2;
mod crossed_square;
pub mod examples;
mod group_square;
mod pt2;
mod two_action;

pub use cat2::{
    cat2_to_double_groupoid, cat2_to_square, check_cat2, derived_identities, phi_collapse, second_target_formula,
    square_roundtrip, square_to_cat2, Cat2, Cat2Build,
};
pub use crossed_square::{
    check_crossed_square, check_square_morphism, square_to_2action, square_to_2action_checked, swap_square,
    CrossedSquare,
};
pub use group_square::*;
pub use pt2::{
    check_split_epi2, corners, outer_action, psi_iso, pt2_roundtrip, pt2_to_2action, two_action_roundtrip,
    two_action_to_pt2, Corner, Corners, PsiIso, Pt2Build, SplitEpi2,
};
pub use two_action::{check_2action, check_2action_morphism, counit_pairing, swap_2action, CornerMaps, Hopf2Action};
