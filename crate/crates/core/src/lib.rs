pub mod cli;
pub mod correspondence;
pub mod fplinalg;
pub mod grouptheory;
pub mod qexact;
