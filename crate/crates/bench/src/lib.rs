pub use gradual_core;
