"""Error types raised while loading linguistic resource files."""


class ResourceError(Exception):
    """Base class for resource loading/validation failures."""


class MissingFileError(ResourceError):
    def __init__(self, path):
        super().__init__(f"missing resource file: {path}")
        self.path = str(path)


class MalformedRowError(ResourceError):
    """A TSV row has the wrong shape (column count, BOM, bad value)."""

    def __init__(self, file, line, detail=""):
        msg = f"{file}:{line}: malformed row"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.file = str(file)
        self.line = line
        self.detail = detail


class DanglingCategoryError(ResourceError):
    """A compatibility pair references a category absent from its lexicon."""

    def __init__(self, cat, file):
        super().__init__(f"{file}: compatibility pair references unknown category {cat!r}")
        self.cat = cat
        self.file = str(file)


class LevelOutOfRangeError(ResourceError):
    def __init__(self, file, line, value):
        super().__init__(f"{file}:{line}: readability level {value!r} outside 1..5")
        self.file = str(file)
        self.line = line
        self.value = value


class UnknownRelationError(ResourceError):
    def __init__(self, file, line, relation):
        super().__init__(f"{file}:{line}: unknown relation {relation!r}")
        self.file = str(file)
        self.line = line
        self.relation = relation


class UnsupportedFormatError(ValueError):
    def __init__(self, fmt):
        super().__init__(f"unsupported output format: {fmt!r}")
        self.fmt = fmt
