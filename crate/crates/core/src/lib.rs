pub mod cli;
pub mod constructions;
pub mod groups;
pub mod perm;
pub mod rank;
pub mod wreath;
