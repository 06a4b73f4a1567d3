//! `key=value` run files. Each entry becomes a `--key=value` flag placed
//! right after the subcommand, ahead of the real flags, so that the last
//! occurrence (the command line) wins.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use crate::args::COMMANDS;
use crate::error::CliError;

pub fn parse(text: &str) -> Result<Vec<(String, String)>, CliError> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| CliError::Config(format!("line {}: expected key=value, got {line:?}", lineno + 1)))?;
        let key = k.trim().replace('_', "-");
        if key.is_empty() || key == "config" {
            return Err(CliError::Config(format!("line {}: invalid key {k:?}", lineno + 1)));
        }
        out.push((key, v.trim().to_string()));
    }
    Ok(out)
}

/// Locate `--config FILE` / `--config=FILE` in raw arguments.
fn config_path(args: &[OsString]) -> Option<PathBuf> {
    let mut it = args.iter().skip(1);
    while let Some(a) = it.next() {
        let s = a.to_string_lossy();
        if s == "--" {
            break;
        }
        if s == "--config" {
            return it.next().map(PathBuf::from);
        }
        if let Some(p) = s.strip_prefix("--config=") {
            return Some(PathBuf::from(p));
        }
    }
    None
}

/// Splice the config file's entries into `args`.
pub fn expand(args: Vec<OsString>) -> Result<Vec<OsString>, CliError> {
    let Some(path) = config_path(&args) else {
        return Ok(args);
    };
    let entries = read(&path)?;
    let Some(pos) = args.iter().position(|a| COMMANDS.contains(&a.to_string_lossy().as_ref())) else {
        return Ok(args);
    };
    let mut flags = Vec::new();
    for (k, v) in entries {
        match v.as_str() {
            "true" => flags.push(OsString::from(format!("--{k}"))),
            "false" => {}
            _ => flags.push(OsString::from(format!("--{k}={v}"))),
        }
    }
    let mut out = args;
    out.splice(pos + 1..pos + 1, flags);
    Ok(out)
}

fn read(path: &Path) -> Result<Vec<(String, String)>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::input(path, e))?;
    parse(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn os(v: &[&str]) -> Vec<OsString> {
        v.iter().map(OsString::from).collect()
    }

    #[test]
    fn parses_flat_files() {
        let kv = parse("# run\n  dim = 3\nhalf_width=5\n\n").unwrap();
        assert_eq!(kv, vec![("dim".into(), "3".into()), ("half-width".into(), "5".into())]);
        assert!(parse("dim 3").is_err());
        assert!(parse("=3").is_err());
    }

    #[test]
    fn finds_the_config_flag() {
        assert_eq!(config_path(&os(&["x", "verify-euclidean", "--config", "a.cfg"])), Some("a.cfg".into()));
        assert_eq!(config_path(&os(&["x", "--config=b.cfg", "predicates"])), Some("b.cfg".into()));
        assert_eq!(config_path(&os(&["x", "predicates", "--", "--config"])), None);
    }

    #[test]
    fn entries_go_before_the_command_line_flags() {
        let dir = std::env::temp_dir().join(format!("sigma-geom-config-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let file = dir.join("run.cfg");
        std::fs::write(&file, "dim=2\npoints=50\n").unwrap();
        let args = os(&["x", "verify-euclidean", "--dim", "3", "--config", file.to_str().unwrap()]);
        let out = expand(args).unwrap();
        let s: Vec<String> = out.iter().map(|a| a.to_string_lossy().into_owned()).collect();
        assert_eq!(&s[..4], ["x", "verify-euclidean", "--dim=2", "--points=50"]);
        assert_eq!(&s[4..6], ["--dim", "3"]);
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
