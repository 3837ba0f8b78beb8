"""Definition files and the set-expression language.

Algebras, lattices, families, and sets can all be written as plain text
and loaded into a workspace; set expressions use /\\ for intersection,
\\/ for union, and ~ for complement, with the usual precedence. The same
machinery backs the command line:

    modernsets validate defs.txt
    modernsets eval --load defs.txt scores "~(A \\/ B)"
"""

from modernsets import (
    eval_expression,
    format_expression,
    load_text,
    parse_expression,
)

DEFINITIONS = """
# a three-level chain written out as an algebra
algebra levels
elements lo mid hi
zero lo
one hi
wedge
lo lo lo
lo mid lo
lo hi lo
mid lo lo
mid mid mid
mid hi mid
hi lo lo
hi mid mid
hi hi hi
vee
lo lo lo
lo mid mid
lo hi hi
mid lo mid
mid mid mid
mid hi hi
hi lo hi
hi mid hi
hi hi hi
complement
lo hi
mid mid
hi lo
end

family scores
universe alice bob
assign alice levels
assign bob levels
end

set A over scores
alice hi
bob mid
end

set B over scores
alice lo
bob hi
end
"""

workspace = load_text(DEFINITIONS)
print("loaded:", sorted(workspace.algebras), sorted(workspace.families), sorted(workspace.sets))

env = workspace.sets
for source in ("A \\/ B", "A /\\ B", "~A", "~(A \\/ B) \\/ A /\\ B"):
    tree = parse_expression(source)
    value = eval_expression(env, tree)
    print(f"{source:24s} parses to {format_expression(tree):24s} = {value.describe()}")

# Operator precedence, spelled out: complement binds tightest, then
# intersection, then union; both binary operators associate left.
tree = parse_expression("~A \\/ B /\\ C \\/ D")
print()
print("~A \\/ B /\\ C \\/ D  ==", format_expression(tree))

# Parse errors carry a column so files can point at the offending token.
try:
    parse_expression("A \\/ (B /\\ )")
except Exception as exc:
    print(f"error: {exc}")
