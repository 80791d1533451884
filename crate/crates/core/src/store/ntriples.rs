//! Line tokenizer for the N-Triples subset found in DBpedia dumps.
//!
//! Only the shape of a statement is checked: `<iri>` or `_:label` subjects,
//! `<iri>` predicates, and an IRI, blank node or literal object, followed by
//! the terminating `.`. IRIs are returned verbatim (no escape decoding).

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Token<'a> {
    Iri(&'a str),
    Blank(&'a str),
    /// Raw literal text including quotes and any language tag or datatype.
    Literal(&'a str),
}

impl<'a> Token<'a> {
    /// Key used for interning: IRIs without brackets, everything else verbatim.
    pub(crate) fn key(self) -> &'a str {
        match self {
            Token::Iri(s) | Token::Blank(s) | Token::Literal(s) => s,
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
pub(crate) enum Line<'a> {
    /// Blank line or comment.
    Skip,
    Statement {
        subject: Token<'a>,
        predicate: Token<'a>,
        object: Token<'a>,
    },
    Malformed,
}

pub(crate) fn parse_line(line: &str) -> Line<'_> {
    let rest = line.trim_start();
    if rest.is_empty() || rest.starts_with('#') {
        return Line::Skip;
    }
    let Some((subject, rest)) = term(rest) else {
        return Line::Malformed;
    };
    let Some((predicate, rest)) = term(rest.trim_start()) else {
        return Line::Malformed;
    };
    let Some((object, rest)) = term(rest.trim_start()) else {
        return Line::Malformed;
    };
    if matches!(subject, Token::Literal(_)) || !matches!(predicate, Token::Iri(_)) {
        return Line::Malformed;
    }
    let Some(tail) = rest.trim_start().strip_prefix('.') else {
        return Line::Malformed;
    };
    let tail = tail.trim();
    if !tail.is_empty() && !tail.starts_with('#') {
        return Line::Malformed;
    }
    Line::Statement {
        subject,
        predicate,
        object,
    }
}

fn term(input: &str) -> Option<(Token<'_>, &str)> {
    match input.as_bytes().first()? {
        b'<' => {
            let end = input.find('>')?;
            let iri = &input[1..end];
            if iri.is_empty() || iri.contains(char::is_whitespace) {
                return None;
            }
            Some((Token::Iri(iri), &input[end + 1..]))
        }
        b'_' => {
            if !input.starts_with("_:") {
                return None;
            }
            let end = input
                .find(|c: char| c.is_whitespace())
                .unwrap_or(input.len());
            if end <= 2 {
                return None;
            }
            Some((Token::Blank(&input[..end]), &input[end..]))
        }
        b'"' => {
            let bytes = input.as_bytes();
            let mut i = 1;
            let close = loop {
                match bytes.get(i)? {
                    b'\\' => i += 2,
                    b'"' => break i,
                    _ => i += 1,
                }
            };
            let mut end = close + 1;
            if input[end..].starts_with("^^<") {
                end += input[end..].find('>')? + 1;
            } else if input[end..].starts_with('@') {
                end += input[end..]
                    .find(|c: char| c.is_whitespace())
                    .unwrap_or(input.len() - end);
            }
            Some((Token::Literal(&input[..end]), &input[end..]))
        }
        _ => None,
    }
}
