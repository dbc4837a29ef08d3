//! Rendering and parsing helpers behind the `tablecli` binary, split out so
//! the integration tests can drive the exact same formatting code.

pub mod render;
