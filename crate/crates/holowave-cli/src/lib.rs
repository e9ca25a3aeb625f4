//! Scenario orchestration for the holowave workbench: configuration,
//! scenario implementations and report emission. The `holowave` binary is a
//! thin front end over these.

pub mod config;
pub mod report;
pub mod scenarios;
