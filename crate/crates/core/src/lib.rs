pub mod chow;
pub mod bundle;
pub mod construction;
pub mod catalog;
pub mod enumerate;
pub mod verify;
pub mod cli;
