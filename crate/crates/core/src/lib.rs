//! Type classification of complex hyperbolic triangle groups.

pub mod algebra;
pub mod enumerate;
pub mod geometry;
pub mod typeclass;
pub mod verify;
