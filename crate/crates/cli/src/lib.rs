pub mod commands;
pub mod curation;
pub mod service;
