use super::{EdgeDocument, ParseError};

struct Stanza {
    is_term: bool,
    header_line: usize,
    id: Option<String>,
    obsolete: bool,
    is_a: Vec<(String, usize)>,
}

/// Minimal OBO reader: `[Term]` stanzas contribute `(id, is_a target)`
/// edges. Obsolete terms, non-term stanzas and all other tags are ignored.
pub fn parse_obo(text: &str, source_name: &str) -> Result<EdgeDocument, ParseError> {
    let mut doc = EdgeDocument {
        source_name: source_name.to_string(),
        ..Default::default()
    };
    let mut stanza: Option<Stanza> = None;

    let flush = |stanza: Option<Stanza>, doc: &mut EdgeDocument| -> Result<(), ParseError> {
        let Some(s) = stanza else { return Ok(()) };
        if !s.is_term {
            return Ok(());
        }
        let Some(id) = s.id else {
            return Err(ParseError::new(
                source_name,
                s.header_line,
                "[Term] stanza without id",
            ));
        };
        if !s.obsolete {
            for (target, line) in s.is_a {
                doc.push(id.clone(), target, line);
            }
        }
        Ok(())
    };

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('!') {
            continue;
        }
        if line.starts_with('[') && line.ends_with(']') {
            flush(stanza.take(), &mut doc)?;
            stanza = Some(Stanza {
                is_term: line == "[Term]",
                header_line: line_no,
                id: None,
                obsolete: false,
                is_a: Vec::new(),
            });
            continue;
        }
        let Some((tag, value)) = line.split_once(':') else {
            continue;
        };
        let value = value.split('!').next().unwrap_or("");
        // drop trailing `{...}` qualifiers
        let value = value.split('{').next().unwrap_or("").trim();
        match (tag.trim(), stanza.as_mut()) {
            ("is_a", None) => {
                return Err(ParseError::new(
                    source_name,
                    line_no,
                    "is_a outside a stanza",
                ));
            }
            ("is_a", Some(s)) if s.is_term => {
                if value.is_empty() {
                    return Err(ParseError::new(source_name, line_no, "empty is_a target"));
                }
                s.is_a.push((value.to_string(), line_no));
            }
            ("id", Some(s)) if s.is_term => {
                if value.is_empty() {
                    return Err(ParseError::new(source_name, line_no, "empty id"));
                }
                s.id = Some(value.to_string());
            }
            ("is_obsolete", Some(s)) => s.obsolete = value == "true",
            _ => {}
        }
    }
    flush(stanza.take(), &mut doc)?;
    Ok(doc)
}
