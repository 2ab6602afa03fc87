//! Exact representation theory of liftings of quantum planes over cyclotomic fields.

pub mod cyclo;
pub mod abelian;
pub mod par;
pub mod structalg;
pub mod lifting;
pub mod report;
pub mod unlinked;
pub mod linked;
pub mod pipeline;
pub mod cli;
