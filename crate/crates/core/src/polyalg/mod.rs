//! Exact polynomial arithmetic in weight and coroot variables.

mod bipoly;
pub mod mod2;
pub mod mono;
pub mod render;

pub use bipoly::BiPoly;
pub use mod2::Mod2Poly;
pub use mono::{compositions, Mono};
