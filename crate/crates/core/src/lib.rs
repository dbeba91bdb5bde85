pub mod cli;
pub mod hfunc;
pub mod laurent;
pub mod linkdata;
pub mod semigroup;
pub mod split;
pub mod violation;
