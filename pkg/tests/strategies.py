"""Shared hypothesis strategies for generated-document properties."""
from hypothesis import strategies as st

# Mix of graded fixture vocabulary, proper nouns, ambiguous forms, and OOV.
VOCAB = [
    "كتب",
    "بيت",
    "فردها",
    "المعادلات",
    "درس",
    "سهل",
    "في",
    "حيث",
    "أحمد",
    "انحلت",
    "عليها",
    "شعبي",
    "يكتب",
    "غثصثق",
    "ذهب",
    "الطلاب",
    "رئتها",
    "بمدرستها",
]

VALID_RUNS = ["#١#", "#٢#", "#٣#", "#٤#", "#٥#", "#1#", "#2#", "#3#", "#4#", "#5#"]
JUNK_RUNS = ["#0#", "#٠#", "#6#", "#9#", "#٩#", "#12#", "#٧٧#"]

words = st.sampled_from(VOCAB)

marked_words = st.tuples(
    st.lists(st.sampled_from(VALID_RUNS + JUNK_RUNS), min_size=1, max_size=3),
    words,
).map(lambda t: "".join(t[0]) + t[1])

noise = st.sampled_from(["٢٠٢٦", "abc", "!", "،", "..."])

chunks = st.one_of(words, marked_words, st.sampled_from(VALID_RUNS + JUNK_RUNS), noise)

separators = st.sampled_from([" ", "  ", "\n", " ، ", "\t", " . "])

documents = st.lists(st.tuples(chunks, separators), min_size=0, max_size=10).map(
    lambda pairs: "".join(a + b for a, b in pairs)
)

# Documents whose markup is only ever valid runs glued to words.
clean_marked_documents = st.lists(
    st.tuples(
        st.one_of(words, st.tuples(st.sampled_from(VALID_RUNS), words).map("".join)),
        separators,
    ),
    min_size=0,
    max_size=10,
).map(lambda pairs: "".join(a + b for a, b in pairs))
