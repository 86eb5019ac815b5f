pub mod fixtures;
pub mod lemma_checks;
pub mod oracles;
