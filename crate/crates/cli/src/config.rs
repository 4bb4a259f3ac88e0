use std::path::PathBuf;

use clap::ValueEnum;

/// Environment variable overriding the cache directory.
pub const CACHE_ENV: &str = "EQSYM_CACHE_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Ci,
    Extended,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Ci => "ci",
            Mode::Extended => "extended",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Flag, then environment, then `$XDG_CACHE_HOME/eqsym`, `~/.cache/eqsym`,
/// and finally `.eqsym-cache` in the working directory.
pub fn cache_dir(flag: Option<PathBuf>) -> PathBuf {
    if let Some(p) = flag {
        return p;
    }
    if let Some(p) = std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()) {
        return PathBuf::from(p);
    }
    if let Some(p) = std::env::var_os("XDG_CACHE_HOME").filter(|v| !v.is_empty()) {
        return PathBuf::from(p).join("eqsym");
    }
    if let Some(home) = std::env::var_os("HOME").filter(|v| !v.is_empty()) {
        return PathBuf::from(home).join(".cache").join("eqsym");
    }
    PathBuf::from(".eqsym-cache")
}
