//! JSON instance and drawing files, and SVG rendering.
//!
//! Vertex ids are 1-based in every file. Grid coordinates are JSON
//! integers; real coordinates are strings with 17 significant digits so a
//! drawing reads back bit-for-bit.

mod drawing_file;
mod instance;
mod svg;

pub use drawing_file::{format_real, parse_real, Coord, DrawingFile, DualBlock, LoadedDrawing, Metadata, RoleEntry};
pub use instance::InstanceFile;
pub use svg::render_svg;

use thiserror::Error;

/// Problems reading or interpreting a file.
#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{0}")]
    Schema(String),
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        let message = e.to_string();
        // serde_json appends " at line L column C"; keep the bare message
        let message = match message.rfind(" at line ") {
            Some(i) => message[..i].to_string(),
            None => message,
        };
        FormatError::Syntax { line: e.line(), column: e.column(), message }
    }
}

impl From<FormatError> for crate::Error {
    fn from(e: FormatError) -> Self {
        crate::Error::Usage(e.to_string())
    }
}

fn schema(msg: impl Into<String>) -> FormatError {
    FormatError::Schema(msg.into())
}
