//! Scene files, JSON reports, SVG figures and the `trihom` command surface.

pub mod commands;
pub mod report;
pub mod scene;
pub mod svg;
pub mod verify;

pub use commands::{run, EXIT_DEGENERATE, EXIT_FAIL, EXIT_INPUT, EXIT_OK};
pub use report::emit_report;
pub use scene::{emit_scene, parse_scene, Scene, SceneError};
pub use svg::{render_svg, RenderError};
