//! Sentences, tagged segments and corpora.
//!
//! All scoring operates on pre-tokenized text: a line is split on runs of
//! whitespace and, by default, case-folded, since matching is
//! case-insensitive. POS tags travel as a parallel token sequence so the
//! same alignment and scoring machinery runs unchanged on either view.
//! Everything here is immutable after construction and safe to share
//! across threads.

use std::fmt;

use thiserror::Error;

/// Errors raised while assembling segments.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TextError {
    /// A segment was built with no reference translations.
    #[error("a segment needs at least one reference")]
    NoReferences,
    /// A tag sequence does not line up with its token sequence.
    #[error("{tags} tags for {tokens} tokens")]
    TagCountMismatch { tags: usize, tokens: usize },
    /// Tags were supplied for some sentences of a segment but not all.
    #[error("tags must cover the hypothesis and every reference")]
    PartialTags,
}

/// An ordered sequence of tokens; the unit both word-level and POS-level
/// scoring operate on.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Sentence {
    tokens: Vec<String>,
}

impl Sentence {
    /// Splits `line` on runs of whitespace and lower-cases every token.
    ///
    /// An empty (or all-whitespace) line yields an empty sentence, which is
    /// legal here and flagged as degenerate downstream.
    pub fn tokenize(line: &str) -> Self {
        Self {
            tokens: line.split_whitespace().map(str::to_lowercase).collect(),
        }
    }

    /// Like [`Sentence::tokenize`] but preserves case, for case-sensitive
    /// studies. POS tags are also parsed this way: they are opaque symbols.
    pub fn tokenize_cased(line: &str) -> Self {
        Self {
            tokens: line.split_whitespace().map(str::to_string).collect(),
        }
    }

    /// Builds a sentence from ready-made tokens.
    ///
    /// Panics if a token is empty or contains whitespace; tokens are taken
    /// verbatim (no case folding).
    pub fn from_tokens<I, S>(tokens: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let tokens: Vec<String> = tokens.into_iter().map(Into::into).collect();
        for token in &tokens {
            assert!(
                !token.is_empty() && !token.chars().any(char::is_whitespace),
                "invalid token {token:?}"
            );
        }
        Self { tokens }
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    /// Token count; the `c` of hypotheses and `r` of references.
    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }
}

impl fmt::Display for Sentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tokens.join(" "))
    }
}

/// A sentence together with its POS tag sequence (one tag per token).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaggedSentence {
    words: Sentence,
    tags: Sentence,
}

impl TaggedSentence {
    pub fn new(words: Sentence, tags: Sentence) -> Result<Self, TextError> {
        if words.len() != tags.len() {
            return Err(TextError::TagCountMismatch {
                tags: tags.len(),
                tokens: words.len(),
            });
        }
        Ok(Self { words, tags })
    }

    pub fn words(&self) -> &Sentence {
        &self.words
    }

    pub fn tags(&self) -> &Sentence {
        &self.tags
    }
}

/// One hypothesis with its parallel references; the unit of sentence-level
/// scoring. Tag sequences, when present, cover the hypothesis and every
/// reference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    hypothesis: Sentence,
    references: Vec<Sentence>,
    hypothesis_tags: Option<Sentence>,
    reference_tags: Vec<Sentence>,
}

impl Segment {
    pub fn new(hypothesis: Sentence, references: Vec<Sentence>) -> Result<Self, TextError> {
        if references.is_empty() {
            return Err(TextError::NoReferences);
        }
        Ok(Self {
            hypothesis,
            references,
            hypothesis_tags: None,
            reference_tags: Vec::new(),
        })
    }

    pub fn with_tags(
        hypothesis: Sentence,
        references: Vec<Sentence>,
        hypothesis_tags: Sentence,
        reference_tags: Vec<Sentence>,
    ) -> Result<Self, TextError> {
        if references.is_empty() {
            return Err(TextError::NoReferences);
        }
        if reference_tags.len() != references.len() {
            return Err(TextError::PartialTags);
        }
        if hypothesis_tags.len() != hypothesis.len() {
            return Err(TextError::TagCountMismatch {
                tags: hypothesis_tags.len(),
                tokens: hypothesis.len(),
            });
        }
        for (reference, tags) in references.iter().zip(&reference_tags) {
            if tags.len() != reference.len() {
                return Err(TextError::TagCountMismatch {
                    tags: tags.len(),
                    tokens: reference.len(),
                });
            }
        }
        Ok(Self {
            hypothesis,
            references,
            hypothesis_tags: Some(hypothesis_tags),
            reference_tags,
        })
    }

    pub fn hypothesis(&self) -> &Sentence {
        &self.hypothesis
    }

    pub fn references(&self) -> &[Sentence] {
        &self.references
    }

    pub fn hypothesis_tags(&self) -> Option<&Sentence> {
        self.hypothesis_tags.as_ref()
    }

    pub fn reference_tags(&self) -> Option<&[Sentence]> {
        if self.reference_tags.is_empty() {
            None
        } else {
            Some(&self.reference_tags)
        }
    }

    pub fn has_tags(&self) -> bool {
        self.hypothesis_tags.is_some()
    }
}

/// An ordered collection of segments.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Corpus {
    segments: Vec<Segment>,
}

impl Corpus {
    pub fn new(segments: Vec<Segment>) -> Self {
        Self { segments }
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn segment_count(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokenize_splits_and_folds() {
        let s = Sentence::tokenize("A stone on");
        assert_eq!(s.tokens(), ["a", "stone", "on"]);
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn tokenize_empty_line() {
        let s = Sentence::tokenize("");
        assert!(s.is_empty());
        assert_eq!(s.len(), 0);
    }

    #[test]
    fn tokenize_collapses_whitespace_runs() {
        let s = Sentence::tokenize("The  CAT");
        assert_eq!(s.tokens(), ["the", "cat"]);
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn tokenize_cased_preserves_case() {
        let s = Sentence::tokenize_cased("The CAT");
        assert_eq!(s.tokens(), ["The", "CAT"]);
    }

    // Hand-tokenized fixture; expectations written independently of the
    // implementation.
    #[test]
    fn tokenize_matches_hand_tokenization_fixture() {
        let fixture: [(&str, &[&str]); 20] = [
            ("A stone on", &["a", "stone", "on"]),
            ("", &[]),
            ("The  CAT", &["the", "cat"]),
            ("one", &["one"]),
            ("  leading spaces", &["leading", "spaces"]),
            ("trailing spaces  ", &["trailing", "spaces"]),
            ("\tTabs\tand spaces ", &["tabs", "and", "spaces"]),
            ("Punctuation , stays .", &["punctuation", ",", "stays", "."]),
            ("MiXeD CaSe WoRdS", &["mixed", "case", "words"]),
            ("don't split-apostrophes", &["don't", "split-apostrophes"]),
            ("hyphen-ated forms", &["hyphen-ated", "forms"]),
            ("123 456seven", &["123", "456seven"]),
            ("ÜBER Straße", &["über", "straße"]),
            ("   ", &[]),
            ("a a a", &["a", "a", "a"]),
            ("El Niño YEAR", &["el", "niño", "year"]),
            ("quote \" unquote \"", &["quote", "\"", "unquote", "\""]),
            ("x y z w v", &["x", "y", "z", "w", "v"]),
            ("SHOUTING!", &["shouting!"]),
            ("mañana MAÑANA", &["mañana", "mañana"]),
        ];
        for (line, expected) in fixture {
            let s = Sentence::tokenize(line);
            assert_eq!(s.tokens(), expected, "line {line:?}");
            assert_eq!(s.len(), expected.len());
        }
    }

    #[test]
    fn tagged_sentence_requires_one_tag_per_token() {
        let words = Sentence::tokenize("the cat");
        let tags = Sentence::tokenize_cased("DET NOUN VERB");
        assert_eq!(
            TaggedSentence::new(words, tags),
            Err(TextError::TagCountMismatch { tags: 3, tokens: 2 })
        );
    }

    #[test]
    fn segment_requires_references() {
        let hyp = Sentence::tokenize("a");
        assert_eq!(Segment::new(hyp, vec![]), Err(TextError::NoReferences));
    }

    #[test]
    fn segment_tags_must_cover_every_reference() {
        let hyp = Sentence::tokenize("a b");
        let refs = vec![Sentence::tokenize("a b"), Sentence::tokenize("b a")];
        let hyp_tags = Sentence::tokenize_cased("X Y");
        let err = Segment::with_tags(hyp, refs, hyp_tags, vec![Sentence::tokenize_cased("X Y")]);
        assert_eq!(err, Err(TextError::PartialTags));
    }
}
