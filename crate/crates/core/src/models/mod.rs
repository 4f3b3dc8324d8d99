pub mod discrete;
pub mod onplus;
pub mod suq2;
