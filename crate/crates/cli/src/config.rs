//! `key = value` config files.
//!
//! Each key is a long flag name without the dashes. A key may repeat for
//! repeatable flags; `true`/`false` switch boolean flags. `command = <name>`
//! selects the subcommand when none is given on the command line. Flags on
//! the command line take precedence over the file.

use anyhow::{bail, Context, Result};
use std::path::Path;

pub const COMMANDS: [&str; 8] = ["count", "euler", "reciprocity", "classify", "s6", "curve", "identity", "selftest"];

#[derive(Debug, PartialEq, Eq)]
pub struct Entry {
    pub key: String,
    pub value: String,
    pub line: usize,
}

pub fn parse(text: &str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            bail!("config line {}: expected `key = value`, got {raw:?}", i + 1);
        };
        let key = k.trim().to_string();
        if key.is_empty() || !key.chars().all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '-') {
            bail!("config line {}: bad key {key:?}", i + 1);
        }
        if key == "config" {
            bail!("config line {}: nested config files are not supported", i + 1);
        }
        out.push(Entry { key, value: v.trim().to_string(), line: i + 1 });
    }
    Ok(out)
}

fn given(args: &[String], key: &str) -> bool {
    let flag = format!("--{key}");
    args.iter().any(|a| *a == flag || a.starts_with(&format!("{flag}=")))
}

/// Splices a config file named by `--config` into the argument list.
pub fn expand(mut args: Vec<String>) -> Result<Vec<String>> {
    let Some(pos) = args.iter().position(|a| a == "--config" || a.starts_with("--config=")) else {
        return Ok(args);
    };
    let flag = args.remove(pos);
    let path = match flag.strip_prefix("--config=") {
        Some(p) => p.to_string(),
        None if pos < args.len() => args.remove(pos),
        None => bail!("--config needs a file name"),
    };
    let text = std::fs::read_to_string(Path::new(&path)).with_context(|| format!("reading config {path}"))?;
    let entries = parse(&text)?;

    let mut cmd_pos = args.iter().skip(1).position(|a| COMMANDS.contains(&a.as_str())).map(|i| i + 1);
    let mut injected = Vec::new();
    for e in entries {
        if e.key == "command" {
            if cmd_pos.is_none() {
                if !COMMANDS.contains(&e.value.as_str()) {
                    bail!("config line {}: unknown command {:?}", e.line, e.value);
                }
                args.insert(1, e.value.clone());
                cmd_pos = Some(1);
            }
            continue;
        }
        if given(&args, &e.key) {
            continue;
        }
        match e.value.as_str() {
            "true" => injected.push(format!("--{}", e.key)),
            "false" => {}
            v => {
                injected.push(format!("--{}", e.key));
                injected.push(v.to_string());
            }
        }
    }
    let Some(at) = cmd_pos else {
        bail!("no subcommand given on the command line or as `command = ...` in {path}");
    };
    args.splice(at + 1..at + 1, injected);
    Ok(args)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn argv(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    #[test]
    fn parses_comments_and_blank_lines() {
        let e = parse("# scan\n\npsi = 0,2\nprime-max=50\n").unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!((e[0].key.as_str(), e[0].value.as_str()), ("psi", "0,2"));
        assert_eq!(e[1].line, 4);
        assert!(parse("psi 0").is_err());
        assert!(parse("Psi = 0").is_err());
    }

    #[test]
    fn command_line_wins() {
        let dir = std::env::temp_dir().join(format!("dwork-config-{}", std::process::id()));
        std::fs::write(&dir, "command = reciprocity\npsi = 2\nprime-max = 50\nmutate = false\n").unwrap();
        let out = expand(argv(&format!("dwork --config {} --prime-max 13", dir.display()))).unwrap();
        assert_eq!(out, argv("dwork reciprocity --psi 2 --prime-max 13"));
        std::fs::remove_file(dir).unwrap();
    }
}
