#!/usr/bin/env python3
"""Regenerate src/newsflow/textproc/data/lemmas_en.txt.

The table maps inflected English forms to their lemma, one
"form<TAB>lemma" pair per line. It is produced from an embedded lexicon:
irregular verb and noun paradigms plus regular inflections (plural/3sg,
past, gerund, comparative/superlative) generated with standard
orthographic rules. Run from the repository root:

    python tools/make_lemma_table.py
"""

from __future__ import annotations

import pathlib

OUT = pathlib.Path(__file__).resolve().parents[1] / "src/newsflow/textproc/data/lemmas_en.txt"

VOWELS = "aeiou"

# (base, past, past participle); 3sg and gerund are regular unless listed
# in IRREGULAR_EXTRA below.
IRREGULAR_VERBS = [
    ("arise", "arose", "arisen"), ("awake", "awoke", "awoken"),
    ("be", "was", "been"), ("bear", "bore", "borne"),
    ("beat", "beat", "beaten"), ("become", "became", "become"),
    ("begin", "began", "begun"), ("bend", "bent", "bent"),
    ("bet", "bet", "bet"), ("bid", "bid", "bid"),
    ("bind", "bound", "bound"), ("bite", "bit", "bitten"),
    ("bleed", "bled", "bled"), ("blow", "blew", "blown"),
    ("break", "broke", "broken"), ("breed", "bred", "bred"),
    ("bring", "brought", "brought"), ("broadcast", "broadcast", "broadcast"),
    ("build", "built", "built"), ("burn", "burnt", "burnt"),
    ("burst", "burst", "burst"), ("buy", "bought", "bought"),
    ("cast", "cast", "cast"), ("catch", "caught", "caught"),
    ("choose", "chose", "chosen"), ("cling", "clung", "clung"),
    ("come", "came", "come"), ("cost", "cost", "cost"),
    ("creep", "crept", "crept"), ("cut", "cut", "cut"),
    ("deal", "dealt", "dealt"), ("dig", "dug", "dug"),
    ("do", "did", "done"), ("draw", "drew", "drawn"),
    ("dream", "dreamt", "dreamt"), ("drink", "drank", "drunk"),
    ("drive", "drove", "driven"), ("eat", "ate", "eaten"),
    ("fall", "fell", "fallen"), ("feed", "fed", "fed"),
    ("feel", "felt", "felt"), ("fight", "fought", "fought"),
    ("find", "found", "found"), ("flee", "fled", "fled"),
    ("fling", "flung", "flung"), ("fly", "flew", "flown"),
    ("forbid", "forbade", "forbidden"), ("forecast", "forecast", "forecast"),
    ("forget", "forgot", "forgotten"), ("forgive", "forgave", "forgiven"),
    ("freeze", "froze", "frozen"), ("get", "got", "gotten"),
    ("give", "gave", "given"), ("go", "went", "gone"),
    ("grind", "ground", "ground"), ("grow", "grew", "grown"),
    ("hang", "hung", "hung"), ("have", "had", "had"),
    ("hear", "heard", "heard"), ("hide", "hid", "hidden"),
    ("hit", "hit", "hit"), ("hold", "held", "held"),
    ("hurt", "hurt", "hurt"), ("keep", "kept", "kept"),
    ("kneel", "knelt", "knelt"), ("know", "knew", "known"),
    ("lay", "laid", "laid"), ("lead", "led", "led"),
    ("lean", "leant", "leant"), ("leap", "leapt", "leapt"),
    ("learn", "learnt", "learnt"), ("leave", "left", "left"),
    ("lend", "lent", "lent"), ("let", "let", "let"),
    ("lie", "lay", "lain"), ("light", "lit", "lit"),
    ("lose", "lost", "lost"), ("make", "made", "made"),
    ("mean", "meant", "meant"), ("meet", "met", "met"),
    ("mislead", "misled", "misled"), ("mistake", "mistook", "mistaken"),
    ("overcome", "overcame", "overcome"), ("overtake", "overtook", "overtaken"),
    ("pay", "paid", "paid"), ("put", "put", "put"),
    ("quit", "quit", "quit"), ("read", "read", "read"),
    ("rebuild", "rebuilt", "rebuilt"), ("ride", "rode", "ridden"),
    ("ring", "rang", "rung"), ("rise", "rose", "risen"),
    ("run", "ran", "run"), ("say", "said", "said"),
    ("see", "saw", "seen"), ("seek", "sought", "sought"),
    ("sell", "sold", "sold"), ("send", "sent", "sent"),
    ("set", "set", "set"), ("shake", "shook", "shaken"),
    ("shed", "shed", "shed"), ("shine", "shone", "shone"),
    ("shoot", "shot", "shot"), ("show", "showed", "shown"),
    ("shrink", "shrank", "shrunk"), ("shut", "shut", "shut"),
    ("sing", "sang", "sung"), ("sink", "sank", "sunk"),
    ("sit", "sat", "sat"), ("sleep", "slept", "slept"),
    ("slide", "slid", "slid"), ("speak", "spoke", "spoken"),
    ("speed", "sped", "sped"), ("spend", "spent", "spent"),
    ("spin", "spun", "spun"), ("split", "split", "split"),
    ("spread", "spread", "spread"), ("spring", "sprang", "sprung"),
    ("stand", "stood", "stood"), ("steal", "stole", "stolen"),
    ("stick", "stuck", "stuck"), ("sting", "stung", "stung"),
    ("strike", "struck", "struck"), ("strive", "strove", "striven"),
    ("swear", "swore", "sworn"), ("sweep", "swept", "swept"),
    ("swell", "swelled", "swollen"), ("swim", "swam", "swum"),
    ("swing", "swung", "swung"), ("take", "took", "taken"),
    ("teach", "taught", "taught"), ("tear", "tore", "torn"),
    ("tell", "told", "told"), ("think", "thought", "thought"),
    ("throw", "threw", "thrown"), ("thrust", "thrust", "thrust"),
    ("tread", "trod", "trodden"), ("undergo", "underwent", "undergone"),
    ("understand", "understood", "understood"),
    ("undertake", "undertook", "undertaken"),
    ("undo", "undid", "undone"), ("uphold", "upheld", "upheld"),
    ("upset", "upset", "upset"), ("wake", "woke", "woken"),
    ("wear", "wore", "worn"), ("weave", "wove", "woven"),
    ("weep", "wept", "wept"), ("win", "won", "won"),
    ("wind", "wound", "wound"), ("withdraw", "withdrew", "withdrawn"),
    ("withstand", "withstood", "withstood"), ("wring", "wrung", "wrung"),
    ("write", "wrote", "written"),
]

# Suppletive or otherwise unpredictable forms not derivable from the
# paradigms above.
IRREGULAR_EXTRA = {
    "am": "be", "is": "be", "are": "be", "were": "be", "being": "be",
    "has": "have", "having": "have",
    "does": "do", "doing": "do",
    "goes": "go", "going": "go",
    "says": "say", "saying": "say",
    "lying": "lie", "dying": "die", "died": "die", "dies": "die",
    "tying": "tie", "tied": "tie", "ties": "tie",
    "better": "good", "best": "good",
    "worse": "bad", "worst": "bad",
    "further": "far", "farther": "far", "furthest": "far", "farthest": "far",
    "less": "little", "least": "little",
    "more": "many", "most": "many",
    "elder": "old", "eldest": "old",
}

IRREGULAR_NOUNS = {
    "children": "child", "men": "man", "women": "woman", "people": "person",
    "feet": "foot", "teeth": "tooth", "geese": "goose", "mice": "mouse",
    "lives": "life", "wives": "wife", "knives": "knife", "leaves": "leaf",
    "halves": "half", "shelves": "shelf", "wolves": "wolf",
    "loaves": "loaf", "thieves": "thief", "selves": "self", "calves": "calf",
    "scarves": "scarf", "oxen": "ox", "crises": "crisis", "analyses": "analysis",
    "bases": "basis", "theses": "thesis", "hypotheses": "hypothesis",
    "diagnoses": "diagnosis", "emphases": "emphasis", "oases": "oasis",
    "phenomena": "phenomenon", "criteria": "criterion", "data": "datum",
    "media": "medium", "curricula": "curriculum", "memoranda": "memorandum",
    "stimuli": "stimulus", "alumni": "alumnus", "fungi": "fungus",
    "nuclei": "nucleus", "radii": "radius", "syllabi": "syllabus",
    "appendices": "appendix", "indices": "index", "matrices": "matrix",
    "vertices": "vertex", "axes": "axis", "series": "series",
    "species": "species", "aircraft": "aircraft", "deer": "deer",
    "sheep": "sheep", "fish": "fish",
}

# Verbs whose final consonant doubles before -ed/-ing despite being longer
# than one syllable (final-syllable stress).
DOUBLING = {
    "admit", "commit", "compel", "confer", "control", "defer", "deter",
    "emit", "equip", "excel", "incur", "infer", "occur", "omit", "patrol",
    "permit", "prefer", "propel", "rebel", "recur", "refer", "regret",
    "remit", "repel", "submit", "transmit", "transfer",
}

# Base lexicon used to generate regular inflections. Coverage is aimed at
# news text: politics, business, sport, health, technology, entertainment
# plus general high-frequency vocabulary.
BASE_WORDS = """
abandon ability absence absorb abuse accelerate accept access accident acclaim
accommodate accompany accomplish account accuse achieve achievement acid
acknowledge acquire acquisition act action activist activity actor actress
adapt add addition address adjust administration admire admission adopt
adoption advance advantage adventure advert advertise advice advise adviser
advocate affair affect afford age agency agenda agent agree agreement aid aim
air airline airport alarm album alert allegation allege alliance allow ally
alter alternative amend amendment amount analyst anchor anger angle announce
announcement annoy answer anticipate apartment apologize apology appeal appear
appearance applaud apple application apply appoint appointment appreciate
approach approval approve area argue argument arm army arrange arrangement
arrest arrival arrive article artist ask aspect assault assemble assembly
assert assess assessment asset assign assist assistance assistant associate
association assume assurance assure athlete atmosphere attach attack attempt
attend attention attitude attorney attract attraction auction audience audit
author authority authorize average avoid award baby back background bag
bailout balance ballot ban band bank banker banner bar bargain barrier base
basis battle beach bean bearer behave behavior belief believe bell belong
benefit bias bill billion bird birth bishop bite blame blast blend block blog
blood board boast boat body bomb bond bonus book boom boost booster border
borrow boss bottle bottom boundary bowl box boycott brain branch brand breach
bread breakdown breakthrough bridge brief broadcaster broker browser budget
builder building bullet bundle burden bureau bus business businessman button
cabinet cable calculate calendar call camera camp campaign campaigner cancel
cancer candidate cap capability capital captain capture car card care career
cargo carrier carry case cash cast castle casualty category cause caution
cease celebrate celebration celebrity cell censor center century ceremony
chain chair chairman challenge challenger champion championship chance change
channel chapter character charge charity chart charter chase chat cheat check
cheer chemical chief child chip choice church circle circuit circulate
citizen city civilian claim clash class classify clause clean clear clerk
click client climate climb clinic clip close closure cloud club clue coach
coal coalition coast coat code coin collaborate collapse colleague collect
creator
collection college collision column columnist combat combination combine
comedy comfort command commander comment commentator commerce commission
commissioner commitment committee commodity communicate communication
community commute companion company compare comparison compensate compete
competition competitor compile complain complaint complete complex complicate
comply component compromise computer concede concentrate concept concern
concert conclude conclusion condemn condition conduct conference confess
confidence confirm confirmation conflict confront confusion congress connect
connection consensus consent consequence conserve consider consideration
consist consolidate conspiracy constituency constitute constitution construct
construction consult consultant consume consumer contact contain container
contend content contest context continent continue contract contractor
contrast contribute contribution conversation convert convict conviction
convince cook cooperate cooperation coordinate cop cope copy corner
corporation correct correspondent corridor corrupt corruption cost council
counsel count counter country county coup couple courage course court cousin
cover coverage crack craft crash create creation creator credit crew
cricket crime criminal crisis critic criticism criticize crop cross crowd
crown cruise crush cry culture cup cure currency custom customer cycle damage
creature credit crew cricket crime criminal
dance danger date daughter deadline deal dealer death debate debt debut
decade decide decision declare decline decrease dedicate defeat defect defend
defendant defender deficit define definition degree delay delegate delegation
delete deliver delivery demand democracy demonstrate demonstration
demonstrator denounce deny depart department departure depend deploy
deployment deposit depression deputy derive describe description desert
deserve design designer desire desk destination destroy destruction detail
detain detect detective detention determine devastate develop developer
development device devote diagnose dialogue diet differ difference dig
digital dinner diplomat direct direction director disagree disappear
disappoint disaster discipline disclose discount discover discovery discuss
discussion disease dismiss display dispute disrupt disruption dissolve
distance distribute distribution district disturb divide dividend division
divorce doctor document documentary dollar domain dominate donate donation
donor door dose doubt download downturn dozen draft drama drift drill drop
drought drug duck dump duty earn earning earthquake ease economist economy
edge edit edition editor educate education effect effort egg elect election
electorate element eliminate elite email embargo embassy embrace emerge
emergency emission emotion emphasize empire employ employee employer
employment empower enable enact encounter encourage end enemy energy enforce
engage engine engineer enhance enjoy enlarge enroll ensure enter enterprise
entertain entertainer enthusiasm entity entrance entrepreneur entry
environment episode equal equality equip equipment era error escalate escape
essay establish establishment estimate evacuate evaluate event evidence exam
examine example exceed exchange execute executive exercise exhibit
exhibition exile exist existence exit expand expansion expect expectation
expense experience experiment expert expire explain explanation explode
exploit explore explosion export expose exposure express expression extend
extension extent extra extract extremist eye face facility factor factory
fail failure faith family fan fare farm farmer fashion father fault favor
fear feature fee fellow festival fever field fighter figure file filter
final finance financier finding fine finger finish fire firefighter firm
fish fisherman fit fix flag flame flash flavor flaw fleet flight float flood
floor flow flower fold folk follow follower food foot footage force forecast
foreigner forest forge form format formation former formula fort fortune
forum forward foster found foundation founder fraction fracture frame
framework franchise fraud freedom frequency friend front frontier fruit fuel
fulfill function fund funeral gain gallery game gang gap garden gas gate
gather gear gene general generate generation gesture giant gift girl glance
glass goal gold golf good govern government governor grab grade graduate
grain grant graph grasp greet grid grief grocery ground group growth guard
guess guest guide guideline gun habit hail hair half hall halt hand handle
harbor harm harvest hat hate haul hazard head headline headquarter health
heart heat hedge height helicopter help hero hesitate highlight highway hill
hint hire history hold holder holiday home homeowner honor hope horizon
horror horse hospital host hostage hotel hour house household housing hub
human hunt hunter hurricane husband idea identify identity ideology ignore
illustrate image imagine immigrant impact implement implementation imply
import impose impress improve improvement incentive incident include income
increase indicate indication indicator individual industry infect infection
inflate inflation influence inform information infrastructure ingredient
initiative injure injury inmate innovate innovation input inquiry insider
insist inspect inspection inspector inspire install institute institution
instruct instruction instrument insult insurance insurer integrate
integration integrity intelligence intend intent intention interest
interfere intern internet interpret interrupt intersection interval
intervene intervention interview introduce introduction invade invasion
invest investigate investigation investigator investment investor invite
involve involvement island issue item jail jet job join joke journal
journalist journey judge judgment juice jump jury justice justify keeper key
kick kid kidnap kill killer kind king kingdom kit kitchen knee knock
knowledge lab label labor laboratory lack lady lake land landlord landmark
landscape lane language lap lapse laptop launch law lawmaker lawsuit lawyer
layer leader leadership league leak lecture legacy legend legislation
legislator legislature lender length lesson letter level liability liberty
library license lift limit line lineup link lion list listen listener
literature litigation load loan lobby locate location lock logic look loop
lord lorry loss lot love lover lower loyalty luck lunch machine magazine
magistrate mail main maintain majority manage management manager mandate
manner manufacture manufacturer map march margin marine mark market
marketing marriage marry mask mass master match mate material matter mayor
meal measure mechanism medal mediate medicine meeting member membership memo
memory mention mentor menu merchant merge merger merit message metal method
microphone midfielder migrant migrate migration mile milestone militant
military milk mill million mind mine miner minister ministry minority
minute miracle mirror missile mission mistake mix mixture mob mobilize mode
model moderate modify moment momentum monarch monitor month monument mood
morning mortgage mother motion motivate motive motor mount mountain move
movement movie murder muscle museum music musician name narrative nation
nature navigate navy need negotiate negotiation negotiator neighbor
neighborhood nerve network news newspaper night nod nominate nomination
nominee norm note notice notification notify notion novel number nurse
object objective obligation observe observer obstacle obtain occasion occupy
ocean offend offender offense offer office officer official oil open opener
opening operate operation operator opinion opponent opportunity oppose
opposition opt option order organ organization organize organizer origin
outbreak outcome outfit outlet outline outlook output outrage oven overhaul
oversee owner ownership pace pack package pact page pain paint painter
painting pair palace pandemic panel paper parade paragraph parent park
parliament part participant participate participation partner partnership
party pass passage passenger passion patch path patient pattern pause
payment payout payroll peace peak peer penalty pension performer period
permission permit person personality perspective persuade petition phase
phenomenon philosophy phone photo photograph photographer phrase pick
picture piece pile pilot pioneer pipe pipeline pitch place plan plane planet
plant plate platform play player plea plead pledge plot plunge pocket poem
poet point police policy politician poll pollute pollution pool population
port portfolio portion portrait portray pose position post poster postpone
pound power practice praise pray prayer precedent predecessor predict
prediction prefer preference premier premiere premium prepare presence
present presenter preserve preside presidency president press pressure
pretend prevent preview price pride priest prince princess principle print
priority prison prisoner privacy private privatize prize probe problem
procedure proceed process processor produce producer product production
profession professor profile profit program progress prohibit project
promise promote promotion prompt proof property proportion proposal propose
prosecute prosecution prosecutor prospect protect protection protest
protester protocol prove provide provider province provision provoke public
publication publish publisher pull pump punch punish punishment pupil
purchase purpose pursue pursuit push qualify quality quantity quarter
quarterback queen question queue quote race racer radar radio raid rail
railway rain raise rally range rank ranking rate rating ratio reach react
reaction reader reassure rebound recall receive receiver reception recession
recipe recipient recognize recommend recommendation record recording recount
recover recovery recruit reduce reduction refer referee reference referendum
refine reflect reform refuge refugee refund refusal refuse regard regime
region register regret regulate regulation regulator reign reinforce reject
relate relation relationship release relief relieve religion rely remain
remark remedy remember remind removal remove render renew rent repair repeat
replace replacement reply report reporter represent representative republic
reputation request require requirement rescue research researcher reserve
reshuffle residence resident resign resignation resist resistance resolution
resolve resort resource respect respond response responsibility rest
restaurant restore restrict restriction result resume retail retailer retain
retire retirement retreat return reveal revenue reverse review revise
revival revive revolution reward rhetoric rhythm rice ride rig right ring
riot rise risk rival river road rock rocket role roll roof room root rope
rot rough round route routine row ruin rule ruler ruling rumor rush sail
sailor saint salary sale sample sanction satellite save scale scan scandal
scare scenario scene schedule scheme scholar school science scientist score
scorer scrap screen script sea seal search season seat second secret
secretary section sector secure security seed seeker seize select selection
seller semester seminar senate senator sentence sentiment sequence serve
server service session settle settlement shade shadow shape share
shareholder shark shelter shift ship shipment shock shoe shop shopper shore
shortage shot shoulder shout show sibling side siege sign signal signature
significance silence sin singer site situation size sketch ski skill skipper
sky slam slash slice slip slogan slot slow slump smartphone smile smoke
snap soar soccer society soldier solicitor solution solve son song source
space span spark speaker specialist specify spectator speculate speech
spell sphere spill spirit spit sponsor sport spot spouse spray spree
spokesman spokesperson squad square squeeze stability stabilize stadium
staff stage stake stakeholder stance standard star start starter state
statement station statistic statue status stay steam steel steer stem step
stick stimulus stock stop store storm story strain strand strategist
strategy stream street strength strengthen stress stretch stride strike
striker string strip stroke structure struggle student studio study stuff
stumble style subject submit subscriber subscription subsidy substance
substitute suburb succeed success successor suffer suggest suggestion suit
sum summit sun supervise supervisor supper supplier supply support supporter
suppress surge surgeon surgery surpass surplus surprise surrender surround
survey survival survive survivor suspect suspend suspension sustain swap
sweep symbol sympathy symptom syndrome system table tackle tactic tag tail
talent talk tank tap target tariff task taste tax taxpayer teacher team
teammate tear technique technology teenager telephone television tenant
tend tension tenure term terminal territory terror terrorist test testify
testimony text theater theme theory therapy threat threaten thrive throne
ticket tide tie tiger time tip tissue title toll ton tone tool top topic
torch total tour tourist tournament tower town toy trace track trade trader
tradition traffic tragedy trail trailer train trainer transaction transfer
transform transit transition translate transplant transport trap travel
traveler treasure treasury treat treatment treaty tree trend trial tribe
tribunal tribute trick trigger trim trip triumph troop trophy trouble truck
trust truth tube tunnel turn turnout tutor tweet twin type tyre umbrella
uniform union unit unite unity universe university update upgrade uphold
upload uprising upset urge usage use user utility vaccine value van variety
vary vegetable vehicle vendor venture venue verdict verify version vessel
veteran veto victim victory video view viewer village violate violation
violence virus visa vision visit visitor vocal voice volume volunteer vote
voter vow voyage wage wait waiter walk wall want war warehouse warn warning
warrant warrior wash waste watch watchdog water wave weaken wealth weapon
wear weather web website wedding week weekend weigh weight welcome welfare
whistle wife wind window wing winner wish withdraw withdrawal witness woman
wonder word work worker workforce workout workplace workshop world worry
wound wrap wreck wrist yard year yell yield zone
animal apartment arrow aunt ball balloon banana basket bath bear bed bee
bike bin blanket boot bottle bowl boy branch brick brother brush bucket
butter cake camel candle cap carpet carrot cat chain chair cheese cherry
chicken clock cloth coat corn cow crab crayon cup curtain desk dish dog
doll dolphin donkey door dress drum duck ear elephant engine eye fan farm
fence finger flag flower fork fox frog game garden gate girl glove goat
grape grass hammer hand hat heart hen hill horse house jacket jar kettle
kite kitten knife ladder lamp leg lemon letter lion lip lizard map mat
melon monkey moon mouth nail neck nest net nose nut onion orange owl page
pan pear pen pencil pet pig pillow pin plate pond pot potato puppy rabbit
rat ribbon river rock roof room rose sandwich scarf sheet shell shirt shoe
sister snake sock sofa spider spoon star stone sun swan tail tent tiger
toe tomato tongue towel train tray truck turtle uncle valley wall watch
wheel whale window wing wolf worm
""".split()

ADJECTIVES = """
angry big bold brave bright broad busy calm cheap clean clever close cold
cool crazy dark deep dirty dry early easy fair fast fat fierce fine firm
flat fresh full funny great green happy hard healthy heavy high hot hungry
large late lazy light long loud low lucky mild narrow near neat new nice
noisy odd old pale poor proud quick quiet rare rich ripe rough sad safe
sharp short shy sick simple slim slow small smart smooth soft steady steep
sticky strange strict strong sweet tall thick thin tight tiny tough ugly
warm weak wealthy weird wet wide wild wise young
""".split()


def doubles_final(word: str) -> bool:
    if len(word) < 3:
        return False
    a, b, c = word[-3], word[-2], word[-1]
    cvc = a not in VOWELS and b in VOWELS and c not in VOWELS + "wxy"
    if not cvc:
        return False
    return len(word) <= 4 or word in DOUBLING


def plural_3sg(word: str) -> str:
    if word.endswith("y") and word[-2:-1] not in VOWELS and len(word) > 2:
        return word[:-1] + "ies"
    if word.endswith(("s", "x", "z", "ch", "sh")):
        return word + "es"
    return word + "s"


def past(word: str) -> str:
    if word.endswith("e"):
        return word + "d"
    if word.endswith("y") and word[-2:-1] not in VOWELS and len(word) > 2:
        return word[:-1] + "ied"
    if doubles_final(word):
        return word + word[-1] + "ed"
    return word + "ed"


def gerund(word: str) -> str:
    if word.endswith("ie"):
        return word[:-2] + "ying"
    if word.endswith("e") and not word.endswith("ee") and len(word) > 2:
        return word[:-1] + "ing"
    if doubles_final(word):
        return word + word[-1] + "ing"
    return word + "ing"


def comparative(word: str) -> str:
    if word.endswith("e"):
        return word + "r"
    if word.endswith("y") and word[-2:-1] not in VOWELS:
        return word[:-1] + "ier"
    if doubles_final(word):
        return word + word[-1] + "er"
    return word + "er"


def superlative(word: str) -> str:
    comp = comparative(word)
    return comp[:-1] + "st"


def main() -> None:
    table: dict[str, str] = {}

    def put(form: str, lemma: str) -> None:
        if form != lemma:
            table.setdefault(form, lemma)

    for base, pst, pp in IRREGULAR_VERBS:
        put(pst, base)
        put(pp, base)
        put(plural_3sg(base), base)
        put(gerund(base), base)
    for form, lemma in IRREGULAR_EXTRA.items():
        table[form] = lemma
    for form, lemma in IRREGULAR_NOUNS.items():
        put(form, lemma)

    irregular_bases = {v[0] for v in IRREGULAR_VERBS}
    for word in BASE_WORDS:
        if not word.isascii() or not word.isalpha():
            continue
        put(plural_3sg(word), word)
        if word not in irregular_bases:
            put(past(word), word)
            put(gerund(word), word)
    for adj in ADJECTIVES:
        put(comparative(adj), adj)
        put(superlative(adj), adj)

    lines = [f"{form}\t{lemma}" for form, lemma in sorted(table.items())]
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(lines)} entries to {OUT}")


if __name__ == "__main__":
    main()
