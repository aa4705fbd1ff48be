MODAL_GRAMMAR = r"""
?formula: disjunction "->" formula -> imp
        | disjunction

?disjunction: disjunction _OR conjunction -> or_
            | conjunction

?conjunction: conjunction _AND unary -> and_
            | unary

?unary: "~" unary -> neg
      | "box" unary -> box
      | "dia" unary -> dia
      | "all" VAR unary -> forall
      | "ex" VAR unary -> exists
      | atom

?atom: "T" -> top
     | "F" -> bot
     | PRED "(" [argument ("," argument)*] ")" -> pred
     | PRED -> pred
     | "(" formula ")"

argument: VAR
        | NUMBER

_OR: "|" | "\\/"
_AND: "&" | "/\\"
PRED: /[A-Z][A-Za-z0-9_]*/
VAR: /[a-z_][A-Za-z0-9_]*/
NUMBER: /[0-9]+/

%import common.WS
%ignore WS
"""

ARITH_GRAMMAR = r"""
?formula: disjunction "->" formula -> imp
        | disjunction

?disjunction: disjunction _OR conjunction -> or_
            | conjunction

?conjunction: conjunction _AND unary -> and_
            | unary

?unary: "~" unary -> neg
      | "all" VAR unary -> forall
      | "ex" VAR unary -> exists
      | atom

?atom: "T" -> top
     | "F" -> bot
     | term "=" term -> eq
     | term "<" term -> lt
     | OPAQUE "(" [term ("," term)*] ")" -> opaque
     | OPAQUE -> opaque
     | "(" formula ")"

?term: term "+" product -> add
     | product

?product: product "*" base -> mul
        | base

?base: NUMBER -> numeral
     | "s" "(" term ")" -> succ
     | VAR -> var
     | "{" formula [";" VAR ("," VAR)*] "}" -> quote
     | "(" term ")"

_OR: "|" | "\\/"
_AND: "&" | "/\\"
OPAQUE: /@[A-Za-z_][A-Za-z0-9_]*/
VAR: /[a-z_][A-Za-z0-9_]*/
NUMBER: /[0-9]+/

%import common.WS
%ignore WS
"""
