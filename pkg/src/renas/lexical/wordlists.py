"""Embedded word tables used by normalization.

COMMON_WORDS gates abbreviation detection (a short word present here is
never treated as an abbreviation) and drives stem restoration for -ing
forms. The irregular tables cover forms that the suffix rules would get
wrong. All entries are lowercase base forms.
"""

COMMON_WORDS = frozenset("""
a ah am an at be do go he hi if in it me my no of oh ok on or so to up we
able about above abstract accept access account act action active actual
adapter add address admin after again age agent alert algorithm alias align
alive all allow alpha also amount anchor angle animation annotation anonymous
answer any append apply arc archive area argument around array arrow article
ascent aspect assert asset assign atom attach attempt attribute audio audit
author auto average await aware axis back backend background backup bad badge
balance band bank banner bar barrier base basic basis batch bean bear beat
become bed before begin being bell below bench best beta between big bill
binary bind binding bit black blank bleed blend blob block blue board body
bold bond bone book boolean boost boot border both bottom bound boundary
box branch brand break bridge brief bright bring broad broken broker browser
brush bubble bucket budget buffer bug build builder building bulk bundle bus
business busy button buy byte cache calendar call camera cancel canvas
cap capacity capture car card care caret carry case cast cat catalog catch
category cause cell cent center central chain chair chance change channel
chaos chapter character charge chart chat cheap check child choice
choose chrome chunk cipher circle city claim class classic clause clean clear
click client clip clock clone close cloud cluster coach code codec coin cold
collect collection color column combine come comma command comment commit
common compare compile complete complex compute concept concrete condition
config confirm connect console constant constraint consumer contact container
content context continue contract control convert cookie cool coordinate copy
core corner corpus correct cost could count counter country course cover
crash create credit crisp cross crowd crypto curly current cursor curve
custom cut cycle daemon daily damage dark dash data database datum date day
dead deal debug decimal deck declare decode decrypt deep default define
degree delay delegate delete delta demand demo dense deny depend depth derive
descent design desk detail detect device dialog dice dict diff digest digit
dim dimension direct directory dirty disable discard discount disk dispatch
display distance divide dock document does dog domain done door dot
double down draft drag drain draw drive driver drop dry dual due dump during
duty each eager early earth ease east easy echo edge edit editor effect
effort eight either element else email embed emit empty enable encode
encoding encrypt end engine enter entity entry enum environment equal error
escape estimate eval evaluate even event ever every exact example except
exception exchange exclude execute exist exit expand expect expire explain
export expose express expression extend extent extra extract eye face fact
factor factory fail fair fall false family fast fat fault feature feed feel
fetch few field fifth figure file fill film filter final find fine finish
fire firm first fit five fix flag flat flavor flex flip float floor flow
flush fly focus fold folder follow font food foot for force foreign forest
fork form formal format forum forward found four fourth fraction fragment
frame free freeze fresh friend from front frozen full fun function future
fuzzy gain game gamma gap gate gather gauge general generate generic get
giant gift give glass global glue goal gold good grab grace grade grain
grand grant graph gray great green grep grey grid group grow guard guess
guest guide habit half hall hand handle handler happy hard hash have head
header heading health heap heart heavy hedge height hello help helper here
hero hidden hide high hint hit hold hole home hook hope horizontal host hot
hour house hover how hub hue human hundred hurt icon idea identifier
identity idle ignore image immutable import inbox include increment indent
index indirect info inform initial inject inline inner input insert inside
install instance instant instead integer intent interface internal interval
into invalid invert invoke is issue item job join joint joke journal judge
jump just keep kernel key kick kind king knob know label lake lambda land
lane language large last late launch layer layout lazy lead leaf leak lean
learn lease least leave ledger left legacy legal length lens less lesson let
letter level library license life lift light like limit line linear link
lint list listen literal little live load loader local locale locate lock
log logic login logo long look lookup loop loose lost lot loud love low
lower machine macro magic mail main major make manager manifest manual many
map margin mark marker market mask master match matched material math matrix
matter maximum may mean meaning measure media medium meet member memory
menu merge mesh message meta metal meter method metric micro middle might
mile mine minimum minor minus minute mirror miss mixed mixin mode model
modern modify module moment money monitor month more most motion mount mouse
move movie much multi music must mutable mutate name namespace narrow native
nature near neat neck need nest net network never new next nice night nine
node noise none noon normal north not note nothing notice notify noun now
null number numeric object observe occur ocean odd off offer office offset
often oil old once one only onto opcode open operand operation operator
option oracle orange order ordinal origin other out outer outline output
outside oval over overlay owner own pack package packet pad padding page
paint pair palette pane panel paper paragraph parallel parent parse parser
part partial party pass past paste patch path pattern pause pay peak peek
peer pen people per percent perfect period permit persist person phase phone
photo phrase pick picture piece pin pink pipe pitch pivot pixel place plain
plan plane plant plate platform play player please plot plug plugin plus
point pointer policy poll pool pop port portal pose position post pot pound
power prefix prepare present press pretty price primary prime print printer
priority private probe problem process produce product profile program
progress project promise prompt proof proper property protocol prototype
prove provide proxy public publish pull pulse pump punch pure purge purple
purpose push put quad quality quarter query question queue quick quiet quit
quota quote race rack radio radius rain raise random range rank rare rate
ratio raw reach read reader ready real reason rebase receive recent record
rect red redo reduce refactor refer reference refresh region register
regular reject
relate relation relative release reload remain remote remove rename render
repair repeat replace replay reply report request require rescue reset
resize resolve resource respond response rest restore result resume retain
retry return reuse reverse review revision reward rich ride right rigid ring
rise risk river road robot role roll room root rope rotate rough round route
router row royal rule run runtime rush safe sale salt same sample sand save
scale scan scene schema scheme scope score screen script scroll seal search
season seat second secret section sector secure see seed seek segment select
self sell semantic send sense sensor sentence separate sequence serial
series serve server service session set setting setup seven shade shadow
shake shallow shape share sharp sheet shelf shell shift shine ship short
shot should show shrink shuffle shut sibling side sign signal signature
silent silver simple since sing single sink site six size skill skin skip
sky sleep slice slide slim slot slow small smart smooth snap snapshot socket
soft solid solution solve some something soon sort sound source south space
span spare sparse spawn speak spec special speed spell spend sphere spin
spite split spread spring sprite square stack staff stage stale stamp stand
standard star start state statement static station status stay steal steel
steep stem step stick still stock stone stop storage store story strategy
stream street stress strict stride strike string strip stroke strong struct
structure stub study stuff style subject submit subset success such suffix
suggest suite sum summary sun super supply support sure surface survey
suspend swap sweep sweet swift switch symbol syntax system tab table tag
tail take talk tall target task tax team tear tech template temporary ten
tenant term terminal test text texture than that the theme then theory there
thick thin thing think third this thread three threshold through throw thumb
thus ticket tie tile time timeout timer timestamp timing tiny tip title to
today toggle token tone tool top topic total touch trace track trade traffic
trail train training transaction transfer transform transient translate trap
trash travel tree trend trial triangle trigger trim trip true trust truth
try tuple turn twelve twenty twice two type typo under underline undo unify
union unique unit universe unknown until untyped up update upgrade upload
uppercase upper use user utility valid value variable variant vector vendor
verb verbose verify version vertex vertical very via video view viewer
virtual visible visit visual voice void volume vote wait wake walk wall want
warm warning wash watch water wave way weak wear web week weight welcome
well west wheel when where which while white whole wide widget width wild
will win window wing winter wire wise with within wizard wolf word work
worker workspace world would wrap write writer wrong yard year yellow yield
young zero zone zoom
""".split())

# Famous abbreviations that stay as-is; expanding them would hurt more than
# help.
NON_EXPAND = frozenset("""
ansi api ascii cli cpu crc css csv dns dom enum ftp gif gpu gui guid gz html
http https id ide ieee io ip iso jdk jpeg jpg jre json jvm md5 mp3 mp4 os
pdf png ram regex rgb rgba rom sdk sha sql ssh ssl svg tar tcp tls tsv udp
ui uid uml uri url urn usb utf uuid ux xml yaml zip
""".split())

# Fallback expansion dictionary (step 4). Single expansion per abbreviation;
# a user-supplied file may extend or override these.
DEFAULT_ABBREVIATIONS = {
    "abbr": "abbreviation",
    "addr": "address",
    "arg": "argument",
    "attr": "attribute",
    "auth": "authentication",
    "avg": "average",
    "bg": "background",
    "bool": "boolean",
    "btn": "button",
    "buf": "buffer",
    "calc": "calculate",
    "cfg": "configuration",
    "char": "character",
    "cmd": "command",
    "cnt": "count",
    "col": "column",
    "conf": "configuration",
    "conn": "connection",
    "coord": "coordinate",
    "ctx": "context",
    "cur": "current",
    "db": "database",
    "decl": "declaration",
    "del": "delete",
    "dest": "destination",
    "dir": "directory",
    "doc": "document",
    "elem": "element",
    "env": "environment",
    "err": "error",
    "exc": "exception",
    "expr": "expression",
    "fmt": "format",
    "fn": "function",
    "func": "function",
    "idx": "index",
    "img": "image",
    "impl": "implementation",
    "init": "initialize",
    "int": "integer",
    "iter": "iterator",
    "lang": "language",
    "len": "length",
    "lib": "library",
    "loc": "location",
    "max": "maximum",
    "mem": "memory",
    "mgr": "manager",
    "min": "minimum",
    "msg": "message",
    "num": "number",
    "obj": "object",
    "op": "operation",
    "opt": "option",
    "param": "parameter",
    "pos": "position",
    "pref": "preference",
    "prev": "previous",
    "proc": "process",
    "prop": "property",
    "ptr": "pointer",
    "recv": "receive",
    "ref": "reference",
    "repo": "repository",
    "req": "request",
    "res": "result",
    "resp": "response",
    "sec": "second",
    "sep": "separator",
    "seq": "sequence",
    "src": "source",
    "stmt": "statement",
    "str": "string",
    "sync": "synchronize",
    "temp": "temporary",
    "tmp": "temporary",
    "ts": "timestamp",
    "util": "utility",
    "val": "value",
    "var": "variable",
    "vec": "vector",
    "ver": "version",
}

# Plural forms the suffix rules would mangle.
IRREGULAR_PLURALS = {
    "aliases": "alias",
    "analyses": "analysis",
    "appendices": "appendix",
    "atlases": "atlas",
    "axes": "axis",
    "biases": "bias",
    "bonuses": "bonus",
    "buses": "bus",
    "busses": "bus",
    "caches": "cache",
    "cacti": "cactus",
    "calves": "calf",
    "canvases": "canvas",
    "children": "child",
    "corpora": "corpus",
    "crises": "crisis",
    "criteria": "criterion",
    "elves": "elf",
    "feet": "foot",
    "foci": "focus",
    "geese": "goose",
    "halves": "half",
    "hypotheses": "hypothesis",
    "indices": "index",
    "knives": "knife",
    "leaves": "leaf",
    "lenses": "lens",
    "lice": "louse",
    "lives": "life",
    "loaves": "loaf",
    "matrices": "matrix",
    "men": "man",
    "mice": "mouse",
    "niches": "niche",
    "nuclei": "nucleus",
    "oxen": "ox",
    "parentheses": "parenthesis",
    "people": "person",
    "phenomena": "phenomenon",
    "quizzes": "quiz",
    "radii": "radius",
    "scarves": "scarf",
    "schemata": "schema",
    "selves": "self",
    "shelves": "shelf",
    "shoes": "shoe",
    "statuses": "status",
    "syllabi": "syllabus",
    "syntheses": "synthesis",
    "teeth": "tooth",
    "theses": "thesis",
    "thieves": "thief",
    "vertices": "vertex",
    "viruses": "virus",
    "wives": "wife",
    "wolves": "wolf",
    "women": "woman",
}

# Irregular verb forms mapped to the infinitive. Regular -ed forms are left
# alone on purpose: in identifiers they almost always act as participial
# adjectives (matched, sorted, cached).
IRREGULAR_VERBS = {
    "ate": "eat",
    "became": "become",
    "began": "begin",
    "begun": "begin",
    "bent": "bend",
    "bit": "bite",
    "bitten": "bite",
    "bled": "bleed",
    "blew": "blow",
    "blown": "blow",
    "bought": "buy",
    "bound": "bind",
    "bred": "breed",
    "broke": "break",
    "brought": "bring",
    "built": "build",
    "came": "come",
    "caught": "catch",
    "chose": "choose",
    "chosen": "choose",
    "crept": "creep",
    "dealt": "deal",
    "did": "do",
    "does": "do",
    "drank": "drink",
    "drawn": "draw",
    "drew": "draw",
    "driven": "drive",
    "drove": "drive",
    "drunk": "drink",
    "dug": "dig",
    "eaten": "eat",
    "fed": "feed",
    "fell": "fall",
    "fallen": "fall",
    "felt": "feel",
    "flew": "fly",
    "flown": "fly",
    "forbade": "forbid",
    "forbidden": "forbid",
    "forgave": "forgive",
    "forgiven": "forgive",
    "forgot": "forget",
    "forgotten": "forget",
    "fought": "fight",
    "found": "find",
    "froze": "freeze",
    "gave": "give",
    "given": "give",
    "goes": "go",
    "gone": "go",
    "got": "get",
    "gotten": "get",
    "grew": "grow",
    "grown": "grow",
    "heard": "hear",
    "held": "hold",
    "hid": "hide",
    "hung": "hang",
    "kept": "keep",
    "knew": "know",
    "known": "know",
    "laid": "lay",
    "lain": "lie",
    "led": "lead",
    "left": "leave",
    "lent": "lend",
    "lit": "light",
    "lost": "lose",
    "made": "make",
    "meant": "mean",
    "met": "meet",
    "paid": "pay",
    "ran": "run",
    "rang": "ring",
    "ridden": "ride",
    "risen": "rise",
    "rode": "ride",
    "rose": "rise",
    "rung": "ring",
    "said": "say",
    "sang": "sing",
    "sat": "sit",
    "saw": "see",
    "seen": "see",
    "sent": "send",
    "shook": "shake",
    "shaken": "shake",
    "shone": "shine",
    "shot": "shoot",
    "shrank": "shrink",
    "shrunk": "shrink",
    "slept": "sleep",
    "slid": "slide",
    "sold": "sell",
    "sought": "seek",
    "spent": "spend",
    "spoke": "speak",
    "spoken": "speak",
    "sprang": "spring",
    "sprung": "spring",
    "spun": "spin",
    "stole": "steal",
    "stolen": "steal",
    "stood": "stand",
    "struck": "strike",
    "stuck": "stick",
    "stung": "sting",
    "sung": "sing",
    "swam": "swim",
    "swept": "sweep",
    "swore": "swear",
    "sworn": "swear",
    "swum": "swim",
    "swung": "swing",
    "taken": "take",
    "taught": "teach",
    "thought": "think",
    "threw": "throw",
    "thrown": "throw",
    "told": "tell",
    "took": "take",
    "tore": "tear",
    "torn": "tear",
    "understood": "understand",
    "went": "go",
    "wept": "weep",
    "withdrawn": "withdraw",
    "withdrew": "withdraw",
    "woke": "wake",
    "woken": "wake",
    "won": "win",
    "wore": "wear",
    "worn": "wear",
    "wound": "wind",
    "written": "write",
    "wrote": "write",
}

IRREGULAR_ADJECTIVES = {
    "best": "good",
    "better": "good",
    "farther": "far",
    "farthest": "far",
    "further": "far",
    "furthest": "far",
    "worse": "bad",
    "worst": "bad",
}

# Adjectives eligible for -er/-est reduction. Kept deliberately small: a
# stem must appear here before a comparative rule may fire, so ordinary
# agent nouns (parser, handler, counter, number) are never touched.
GRADABLE_ADJECTIVES = frozenset("""
big bright broad busy calm cheap clean clear close coarse cold cool crisp
dark deep dense dirty dry early easy empty fair fast few fine firm flat
fresh full grand great happy hard heavy high hot large late lazy light long
loose loud narrow near neat new nice old plain poor proud pure quick quiet
rare raw rich rough safe shallow sharp short simple slim slow small smart
smooth soft sparse steep strict strong tall thick thin tight tiny true warm
weak wet wide wild wise young
""".split())

# Singular words the plural rules would corrupt.
UNINFLECTED = frozenset("""
alias always analysis as atlas axis basis bias canvas chaos gas has is lens
lower news perhaps res series species this thus upper was yes
""".split())
