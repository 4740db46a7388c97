use std::fs;
use std::path::Path;

use anyhow::{anyhow, Context};
use operad_gb_core::{parse_poly, presets, Error, GradedContext, TreePolynomial};

/// Reads one polynomial per line; `#` starts a comment.
pub fn parse_relation_text(ctx: GradedContext, text: &str, origin: &str) -> anyhow::Result<Vec<TreePolynomial>> {
    let mut out = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or_default();
        if body.trim().is_empty() {
            continue;
        }
        let f = parse_poly(ctx, body).map_err(|e| match e {
            Error::Parse(p) => anyhow!("{origin}:{}:{}: {}", k + 1, p.position + 1, p.message),
            other => anyhow!("{origin}:{}: {other}", k + 1),
        })?;
        out.push(f);
    }
    Ok(out)
}

pub fn read_relation_file(ctx: GradedContext, path: &Path) -> anyhow::Result<Vec<TreePolynomial>> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_relation_text(ctx, &text, &path.display().to_string())
}

pub fn preset_relations(ctx: GradedContext, name: &str) -> anyhow::Result<Vec<TreePolynomial>> {
    presets::preset(name, ctx).ok_or_else(|| {
        let known: Vec<&str> = presets::PRESETS.iter().map(|(n, _)| *n).collect();
        anyhow!("unknown preset '{name}' (known: {})", known.join(", "))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use operad_gb_core::presets::EVEN_TERNARY;

    #[test]
    fn comments_and_blank_lines() {
        let text = "# header\n\n(***)  # trailing\n  ((***)**) - (**(***))\n";
        let got = parse_relation_text(EVEN_TERNARY, text, "x").unwrap();
        assert_eq!(got.len(), 2);
    }

    #[test]
    fn errors_name_line_and_column() {
        let err = parse_relation_text(EVEN_TERNARY, "(***)\n(**)\n", "rel.txt").unwrap_err();
        assert_eq!(err.to_string(), "rel.txt:2:4: vertex has 2 children, expected 3");
    }

    #[test]
    fn unknown_preset() {
        assert!(preset_relations(EVEN_TERNARY, "nope").unwrap_err().to_string().contains("pa"));
    }
}
