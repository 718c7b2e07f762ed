//! Invariants that a 3-manifold given by integral surgery on a link must
//! satisfy to embed in S⁴ with abelian complementary fundamental groups.

pub mod catalog;
pub mod cover;
pub mod crowell;
pub mod engine;
pub mod error;
pub mod fox;
pub mod presentation;
pub mod word;

pub use error::{EmbedError, Result};
pub use presentation::{abelianize, parse_presentation, AbelianStructure, Epimorphism, GroupPresentation};
pub use word::{parse_word, Word};
