"""
Грамматика текстовых форм: процессы (.mps), глобальные типы (.gty), локальные типы

Выбор:      s[r][p](+){ 0.6: yes(v). P , 2/5: no(v). Q }   или   y[p](+){ ... }
Ветвление:  s[r][p]&{ yes(x). P , no(x). Q }
Ограничение: new s . P    new s : "g.gty" . P    new s : < G > . P
Определение: def X(x, y) = P in Q
Параллель:  P | Q   (самый низкий приоритет; продолжения ветвей - префиксы)
Глобальный тип: rB -> rA { [0,1]: talk(string). G , 0.05: quit(string). end }
Локальный тип:  rA (+){ [0,1]: !talk(string). T }   rA &{ ?yes(string). T }
"""

from lark import Lark

GRAMMAR = r"""
    process_file: process
    gtype_file: gtype
    ltype_file: ltype

    // ---------------- процессы ----------------
    process: prefix ("|" prefix)*

    ?prefix: select
        | branch
        | restrict
        | define
        | call
        | "0" -> nil
        | "(" process ")"

    chan_head: NAME "[" NAME "]" ("[" NAME "]")?

    select: chan_head "(+)" "{" sel_branches? "}"
    sel_branches: sel_branch ("," sel_branch)*
    sel_branch: PROB ":" NAME "(" term ")" "." prefix

    branch: chan_head "&" "{" arms? "}"
    arms: arm ("," arm)*
    arm: NAME "(" NAME ")" "." prefix

    restrict: "new" NAME annotation? "." prefix
    annotation: ":" ESCAPED_STRING -> file_annotation
        | ":" "<" gtype ">" -> inline_annotation

    define: "def" NAME "(" params? ")" "=" prefix "in" prefix
    params: NAME ("," NAME)*

    call: NAME "(" args? ")"
    args: term ("," term)*

    ?term: NAME -> name_term
        | NAME "[" NAME "]" -> role_term
        | INTEGER -> int_term
        | "true" -> true_term
        | "false" -> false_term
        | ESCAPED_STRING -> str_term

    // ---------------- глобальные типы ----------------
    ?gtype: "end" -> g_end
        | "rec" NAME "." gtype -> g_rec
        | NAME "->" NAME "{" g_branches? "}" -> g_interaction
        | NAME -> g_var
        | "(" gtype ")"
    g_branches: g_branch ("," g_branch)*
    g_branch: interval ":" NAME "(" SORT ")" "." gtype

    ?interval: "[" PROB "," PROB "]" -> range_interval
        | PROB -> point_interval

    // ---------------- локальные типы ----------------
    ?ltype: "end" -> l_end
        | "rec" NAME "." ltype -> l_rec
        | NAME -> l_var
        | NAME "(+)" "{" l_selections? "}" -> l_select
        | NAME "&" "{" l_arms? "}" -> l_branch
        | "(" ltype ")"
    l_selections: l_selection ("," l_selection)*
    l_selection: (interval ":")? "!" NAME "(" SORT ")" "." ltype
    l_arms: l_arm ("," l_arm)*
    l_arm: "?" NAME "(" SORT ")" "." ltype

    NAME: /[A-Za-z][A-Za-z0-9_]*/
    PROB: /\d+\/\d+|\d+\.\d+|\d+/
    INTEGER: /-?\d+/
    SORT: "nat" | "int" | "bool" | "string"
    COMMENT: /#[^\n]*/

    %import common.ESCAPED_STRING
    %import common.WS
    %ignore WS
    %ignore COMMENT
"""

parser = Lark(GRAMMAR, start=["process_file", "gtype_file", "ltype_file"], parser="lalr")
