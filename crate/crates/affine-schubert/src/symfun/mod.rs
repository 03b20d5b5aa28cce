//! Tableaux and charge, Kostka–Foulkes polynomials, symmetric group
//! characters, the graded quotient by subset elementary symmetric functions,
//! and the level-one decomposition of the first minor filtration piece.

pub mod characters;
pub mod kostka;
pub mod level_one;
pub mod quotient;
pub mod tableau;

pub use characters::{sn_character, SnClassFunction};
pub use kostka::{cocharge_kostka, kostka_foulkes};
pub use level_one::{level_one_check, DominantWeight, LevelOneReport};
pub use quotient::{b_mu_graded_character, c_mu_generators, graded_multiplicity, GradedCharacter};
pub use tableau::{charge, semistandard_tableaux, Tableau};
