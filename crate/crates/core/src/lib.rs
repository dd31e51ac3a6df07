pub mod arith;
pub mod cardinal;
pub mod checker;
pub mod cli;
pub mod formula;
pub mod ncset;
pub mod numerosity;
pub mod oracle;
pub mod parareal;
pub mod truth;
