// Generated from data/unigrams.txt: 10,000 frequent lowercase English unigrams.
#include "zicl/unigrams.hpp"

namespace zicl::demos::detail {

const char* const kUnigramBlob =
    "the\nand\nfor\nthat\nyou\nwith\nthis\nwas\nare\nhave\nnot\nbut\n"
    "from\nyour\nall\nhis\nthey\none\ncan\nwill\njust\nlike\nabout\nout\n"
    "what\nhas\nwhen\nmore\nwere\nwho\nhad\ntheir\nthere\nher\nwhich\ntime\n"
    "get\nbeen\nwould\nshe\nnew\npeople\nhow\nsome\nalso\nthem\nnow\nother\n"
    "its\nour\nthan\ngood\nonly\nafter\nfirst\nhim\ninto\nknow\nsee\ntwo\n"
    "make\nover\nthink\nany\nthen\ncould\nback\nthese\nwant\nbecause\nwell\nsaid\n"
    "way\nmost\nmuch\nvery\nwhere\neven\nshould\nmay\nhere\nneed\nreally\ndid\n"
    "right\nwork\nyear\nyears\nbeing\nday\ntoo\ngoing\nbefore\noff\nwhy\nmade\n"
    "still\ntake\ngot\nmany\nnever\nthose\nlife\nsay\nworld\ndown\ngreat\nthrough\n"
    "last\nwhile\nbest\nsuch\nlove\nman\nhome\nlong\nlook\nsomething\nuse\nsame\n"
    "used\nboth\nevery\ncome\npart\nstate\nthree\naround\nbetween\nalways\nbetter\nfind\n"
    "help\nhigh\nlittle\nold\nsince\nanother\ndoes\nown\nthings\nunder\nduring\ngame\n"
    "thing\ngive\nhouse\nplace\nschool\nagain\nnext\neach\nwithout\nagainst\nend\nfound\n"
    "must\nshow\nbig\nfeel\nsure\nteam\never\nfamily\nkeep\nmight\nplease\nput\n"
    "money\nfree\nsecond\nsomeone\naway\nleft\nnumber\ncity\ndays\nlot\nname\nnight\n"
    "play\nuntil\ncompany\ndoing\nfew\nlet\nreal\ncalled\ndifferent\nhaving\nset\nthought\n"
    "done\nhowever\ngetting\ngod\ngovernment\ngroup\nlooking\npublic\ntop\nwomen\nbusiness\ncare\n"
    "start\nsystem\ntimes\nweek\nalready\nanything\ncase\nnothing\nperson\ntoday\nchange\nenough\n"
    "everything\nfull\nlive\nmaking\npoint\nread\ntold\nyet\nbad\nfour\nhard\nmean\n"
    "once\nsupport\ntell\nincluding\nmusic\npower\nseen\nstates\nstop\nwater\nbased\nbelieve\n"
    "call\nhead\nmen\nnational\nsmall\ntook\nwhite\ncame\nfar\njob\nside\nthough\n"
    "try\nwent\nyes\nactually\namerican\nlater\nless\nline\norder\nparty\nrun\nsays\n"
    "service\ncountry\nopen\nseason\nshit\nthank\nchildren\neveryone\ngeneral\ntrying\nunited\nusing\n"
    "area\nblack\nfollowing\nlaw\nmakes\ntogether\nwar\nwhole\ncar\nface\nfive\nkind\n"
    "maybe\nper\npresident\nstory\nworking\ncourse\ngames\nhealth\nhope\nimportant\nleast\nmeans\n"
    "news\nwithin\nable\nbook\nearly\nfriends\ninformation\nlocal\npost\nthanks\nvideo\nyoung\n"
    "ago\nothers\nsocial\ntalk\ncourt\nfact\ngiven\nguys\nhalf\nhand\nlevel\nmind\n"
    "often\nsingle\nbecome\nbody\ncoming\ncontrol\ndeath\nfood\nguy\nhours\noffice\npay\n"
    "problem\nsouth\ntrue\nalmost\nfuck\nhistory\nknown\nlarge\nlost\nresearch\nroom\nseveral\n"
    "started\ntaking\nuniversity\nwin\nwrong\nalong\nanyone\nelse\ngirl\njohn\nmatter\npretty\n"
    "remember\nair\nbit\nfriend\nhit\nneeds\nnice\nplaying\nprobably\nsaying\nunderstand\nyeah\n"
    "york\nclass\nclose\ncomes\nidea\ninternational\nlooks\npast\npossible\nwanted\ncause\ndue\n"
    "happy\nhuman\nmembers\nmonths\nmove\nquestion\nseries\nwait\nwoman\nask\ncommunity\ndata\n"
    "late\nleave\nnorth\nsaw\nspecial\nwatch\neither\nfucking\nfuture\nlight\nlow\nmillion\n"
    "morning\npolice\nshort\nstay\ntaken\nage\nbuy\ndeal\nrather\nreason\nred\nreport\n"
    "soon\nthird\nturn\nwhether\namong\ncheck\ndevelopment\nform\nfurther\nheart\nminutes\nmyself\n"
    "services\nyourself\nact\nalthough\nasked\nchild\nfire\nfun\nliving\nmajor\nmedia\nphone\n"
    "players\nart\nbehind\nbuilding\neasy\ngonna\nmarket\nnear\nnon\nplan\npolitical\nquite\n"
    "six\ntalking\nwest\nworks\naccording\navailable\neducation\nfinal\nformer\nfront\nkids\nlist\n"
    "ready\nsometimes\nson\nstreet\nbring\ncollege\ncurrent\nexample\nexperience\nheard\nlondon\nmeet\n"
    "program\ntype\nbaby\nchance\nfather\nmarch\nprocess\nsong\nstudy\nword\nacross\naction\n"
    "clear\ngave\ngets\nhimself\nmonth\noutside\nself\nstudents\nwords\nboard\ncost\ncut\n"
    "field\nheld\ninstead\nmain\nmoment\nmother\nroad\nseems\nthinking\ntown\nwants\ndepartment\n"
    "energy\nfight\nfine\nforce\nhear\nissue\nplayed\npoints\nprice\nrest\nresults\nrunning\n"
    "shows\nspace\nsummer\nterm\nwife\namerica\nbeautiful\ndate\ngoes\nkilled\nland\nmiss\n"
    "project\nsex\nshot\nsite\nstrong\naccount\nespecially\neyes\ninclude\njune\nparents\nperiod\n"
    "position\nrecord\nsimilar\ntotal\nabove\nclub\ncommon\ndied\nfilm\nhappened\nknew\nlead\n"
    "likely\nmilitary\nperfect\npersonal\nsecurity\nshare\nwon\napril\ncenter\ncounty\ncouple\ndead\n"
    "english\nhappen\nhold\nindustry\ninside\nissues\nonline\nplayer\nprivate\nproblems\nreturn\nrights\n"
    "sense\nstar\ntest\nview\nweeks\nbreak\nbritish\ncompanies\nevent\nhigher\nhour\nmember\n"
    "middle\nneeded\npresent\nresult\nsorry\ntakes\ntraining\nwish\nanswer\nboy\ndesign\nfinally\n"
    "girls\ngold\ngone\nguess\ninterest\njuly\nking\nlearn\npolicy\nsociety\nadded\nalone\n"
    "average\nbank\nbrought\ncertain\nchurch\neast\nhands\nhot\nlonger\nmedical\nmovie\noriginal\n"
    "park\nperformance\npress\nreceived\nrole\nsent\nthemselves\ntried\nworked\nworth\nareas\nbecame\n"
    "bill\nbooks\ncool\ndirector\nexactly\ngiving\nground\nmeeting\nprovide\nquestions\nrelationship\nseptember\n"
    "sound\nsource\nusually\nvalue\nevidence\nfollow\nlives\nofficial\nproduction\nrate\nreading\nround\n"
    "save\nstand\nstuff\ntax\nwhatever\namount\nblue\ncountries\ndavid\ndrive\neat\nfall\n"
    "fast\nfederal\nfeeling\nfelt\ngreen\nleague\nmanagement\nmatch\nmodel\npicture\nsize\nstep\n"
    "trust\ncentral\nchanges\nengland\nforward\ngroups\nhey\nkey\nmom\npage\npaid\nrange\n"
    "review\nscience\ntrade\nupon\nvarious\nattention\nbrother\ncannot\ncharacter\nchief\ncup\nfootball\n"
    "hate\njames\nled\nlooked\nlower\nnatural\noctober\nproperty\nquality\nsend\nstyle\nvote\n"
    "amazing\naugust\nblood\nchina\ncomplete\ndog\neconomic\nhell\ninvolved\nitself\nlanguage\nlord\n"
    "november\noil\nrelated\nserious\nstage\nterms\ntitle\nadd\narticle\nattack\nborn\ndamn\n"
    "decided\ndecision\nenjoy\nentire\nfrench\njanuary\nkill\nmet\nperhaps\npoor\nrelease\nsituation\n"
    "technology\nturned\nwebsite\nwritten\nchoice\ncode\nconsidered\ncontinue\ncouncil\ncover\ncurrently\ndoor\n"
    "election\neuropean\nevents\nfinancial\nforeign\nhair\nincrease\nlegal\nlose\nmichael\npick\nrace\n"
    "seem\nseven\nsign\nsimple\nsimply\nstaff\nsuper\nunion\nwalk\nwashington\nbed\nbegan\n"
    "built\ncareer\nchanged\ncrazy\ndaily\ndaughter\ndecember\ndie\ndifficult\nfigure\nhospital\nknows\n"
    "loss\nmodern\nones\npaper\nparts\npopular\npublished\nsafe\nstarting\nsystems\nversion\nvoice\n"
    "whose\nwriting\narmy\naustralia\nearth\nforget\ngoal\nhuge\ninternet\nlisten\nokay\npractice\n"
    "rules\nsea\nsir\nsuccess\ntowards\nwaiting\nways\naccess\nbase\nbelow\ncreated\ndeep\n"
    "followed\nlol\nmark\nmissing\noffer\npass\nprofessional\nreleased\nrisk\nschools\nsleep\ntable\n"
    "ten\ntruth\nball\nbox\nbuild\ncard\ncases\ndark\ndistrict\neurope\ngeorge\nindia\n"
    "mine\nminister\nnote\npercent\npiece\nproducts\nrecent\nseeing\nstraight\nvisit\nwall\nwanna\n"
    "wrote\nallowed\nboys\nculture\netc\nfans\nfebruary\ngives\ngrowth\nincluded\nmarried\nofficer\n"
    "pain\npaul\nplaces\nrespect\nresponse\nriver\nrock\nshall\nspeak\nspecific\nstandard\ntonight\n"
    "write\nalbum\ncentury\ncharge\ncold\ncreate\neffect\neight\nexcept\neye\nfunny\nlimited\n"
    "moving\nnetwork\npeace\nprovided\nrecently\nrequired\nsales\nspent\nstore\nstudent\ntomorrow\ntrack\n"
    "via\nwatching\nweight\naddition\nahead\nallow\nanti\nassociation\nbeat\nbrown\ncapital\nchinese\n"
    "committee\nconference\ndifference\ndouble\nexpect\ngas\nisland\nmoved\nnormal\nplans\npopulation\npotential\n"
    "pressure\nradio\nrussian\nstation\ntext\ntreatment\nwestern\nass\nbeginning\ncalifornia\ncampaign\ncertainly\n"
    "completely\ncontent\ncredit\ncross\ndescribed\ndespite\nfemale\nfocus\nhusband\nice\nindividual\ninteresting\n"
    "join\nkept\nleading\nloved\nmessage\nmiles\nnearly\nparticular\nprevious\nquickly\nregion\nreported\n"
    "section\nsort\nspeed\ntravel\nconsider\ncontact\ndrop\nfair\nfeet\njesus\nkid\nlink\n"
    "positive\nsale\nthroughout\ntour\nwelcome\nabsolutely\nadditional\nbeyond\nconditions\nearlier\nextra\nforces\n"
    "immediately\njobs\nleaving\nminute\nnature\nnumbers\nquick\nsell\nsignificant\nstudies\nunless\nwinning\n"
    "agree\ncanada\nclean\ncomputer\nconstruction\nepisode\nfavorite\nincome\njustice\nlevels\nmanager\nmovement\n"
    "photo\nposted\nsafety\nsan\nscene\nsold\nsounds\nspend\nstatement\nsun\nteams\nability\n"
    "announced\nasking\ncalling\ncoach\ncollection\ncontinued\ncosts\ndefinitely\ndesigned\nexpected\nfriday\ngun\n"
    "happens\nheavy\nincludes\nknowledge\nparticularly\nsearch\nsubject\ntrain\nwide\nwow\nauthor\ncentre\n"
    "claim\ndad\ndeveloped\nfear\nfit\ngenerally\ngerman\nglobal\ngoals\ngotta\nhotel\ninterested\n"
    "judge\nlady\nleader\nletter\nlines\nmaterial\nnamed\nnobody\nopportunity\nplus\npre\nproduct\n"
    "regular\nsecretary\nsister\nstories\nunit\nworkers\nannual\nanymore\nbar\nbattle\nbrain\ncontract\n"
    "degree\nfamilies\nfeatures\nfinished\nfloor\nfrance\ngrowing\nhurt\nimage\ninsurance\nmajority\nmeant\n"
    "opening\nopinion\nphysical\npro\nreach\nrule\nseriously\nsports\nstupid\nsuccessful\nactive\nadministration\n"
    "approach\naustralian\nbiggest\ncancer\ncivil\ndance\ndefense\ndirection\nindependent\nmaster\nnone\nreasons\n"
    "russia\nship\nstock\ntrump\nweekend\nwonder\nworst\nafrica\nawesome\nband\nbeach\ncash\n"
    "clearly\ncommercial\ncompared\neffort\nended\nfan\nfighting\nimagine\nimpact\nlack\nlatest\nlearning\n"
    "multiple\nolder\noperation\norganization\npassed\npictures\nprotect\nsecret\nsenior\nspring\nsunday\ntelling\n"
    "wear\nactivities\naddress\nanalysis\nanyway\nbought\ncalls\nchoose\nchristmas\ncolor\ncommission\ncompetition\n"
    "details\ndirect\ndream\neasily\nfinish\ngrand\nincreased\nindian\nliterally\nluck\nmarriage\nnames\n"
    "necessary\npatients\nresources\nrich\nskin\nspeaking\nsupposed\nsweet\nthus\ntouch\nyesterday\ncaught\n"
    "closed\ncongress\ndamage\ndirectly\ndisease\ndoctor\ndoubt\ndrink\ndriving\nestablished\nfacebook\nfeels\n"
    "fish\ngay\ngermany\nglad\ngreater\ngrow\nlargest\nmachine\nnotice\noverall\nplanning\nprofessor\n"
    "programs\nrecords\nreports\nshown\nsit\ntrip\nassociated\nbasic\ncaptain\ncarry\ncars\ncrime\n"
    "effective\neffects\nexplain\nfully\nhighly\nholding\njapan\nlaws\nmale\nmrs\nparties\nplant\n"
    "reality\nsmith\nspot\ntexas\nwinter\nworse\nadvice\nagreement\naward\nblock\nbroken\ncaused\n"
    "challenge\ncharacters\nchristian\ncomment\nequipment\neventually\nhelped\nholy\nkilling\nlived\nlots\nnation\n"
    "otherwise\npeter\nprices\nprimary\npurpose\nrates\nresponsible\nshop\nshowing\nsick\nteacher\ntheory\n"
    "uses\nwilliam\nagency\navoid\ncamera\ncatch\ncell\ncoast\ncomments\ndrug\neconomy\nenvironment\n"
    "executive\nfoot\nhall\nmass\nmeaning\nmission\nnine\nofficers\noperations\npolitics\npop\nproduced\n"
    "ran\nsaturday\nstatus\ntherefore\ntrial\ntruly\nweather\nactivity\napp\napplication\nclaims\ncoffee\n"
    "complex\ncondition\ndivision\nevening\nflight\nfreedom\ngoogle\nheat\nhighest\ninterview\nlibrary\nlocated\n"
    "location\nmurder\nobama\noffered\nputting\nqueen\nseconds\nshowed\nsitting\nstanding\nstars\nwalking\n"
    "accept\nactual\nappear\nattempt\nbroke\nchannel\ndistance\neating\nexchange\nfat\nfell\nfinding\n"
    "glass\nlearned\nlosing\nmobile\nnorthern\nopened\nplaced\npowerful\nprior\nprotection\nreached\nreceive\n"
    "religious\nride\nrobert\nroyal\nscreen\nserve\nsigned\nslow\nspecies\nspeech\ntraffic\ntree\n"
    "types\nwearing\nwhom\nwonderful\nagreed\nairport\nanimals\nappears\nbegin\nbenefits\nbottom\ncities\n"
    "demand\nengine\neverybody\nfamous\nideas\ninvestment\nkeeping\nlie\nnotes\npartner\nplays\nraised\n"
    "runs\nsad\nsolution\nsongs\nsources\nsouthern\nsquare\nstopped\nstructure\nthomas\ntraditional\ntwice\n"
    "wind\nworry\namericans\nappeared\nbecomes\nbrand\nbus\ncent\nchicago\ncount\ncovered\ncritical\n"
    "digital\nforced\nfourth\nfresh\nlake\nmental\nmentioned\nmissed\nmostly\nmouth\nowner\nphotos\n"
    "previously\nrealize\nremain\nscale\nscore\nseparate\nsmart\nstarts\nsurface\nthrow\ntom\ntotally\n"
    "twitter\nviews\nwedding\nacting\nactions\nafrican\narms\nbenefit\nbudget\nclick\nestate\nfailed\n"
    "faith\nfashion\nfeature\nfund\ngeneration\nhearing\nhill\njack\nlarger\nlouis\nmetal\nmid\n"
    "paris\nprofile\npull\npush\nreturned\nrose\nseat\nseemed\nsexual\ntarget\nunderstanding\nvillage\n"
    "agent\nanimal\napply\nauthority\nbasis\nbecoming\nchris\ndraw\ndude\nemployees\nenter\nfollows\n"
    "foundation\ngain\nhttp\nindividuals\njapanese\nleaders\nmemory\nprime\nprojects\nring\nrise\nselling\n"
    "served\nsilver\nsoul\nspread\nsupply\nwaste\nweird\nadult\napparently\nartist\nchairman\nedition\n"
    "engineering\ngrade\nhappening\nhealthy\ninstitute\nmethod\nmike\nmonday\nnations\nobviously\noption\nprison\n"
    "provides\nremains\nsenate\nsmaller\nsomebody\nstone\nstrength\nusers\nwild\nwindow\nwinner\narrived\n"
    "bag\nbet\ncamp\ncast\nchrist\ncontinues\ncorrect\ndangerous\nextremely\nfirm\ngreatest\nhandle\n"
    "improve\nindeed\nleaves\nmovies\nnegative\nprevent\nremoved\nrichard\nspirit\ntelevision\ntill\ntrouble\n"
    "usa\nvideos\nadvantage\napart\naware\ncat\ncustomers\ndecide\ndinner\ndollars\neastern\nfifth\n"
    "function\ngift\nhelping\nherself\nimpossible\ninfluence\nitems\njoe\nlos\nmarketing\nmary\nmaterials\n"
    "nor\nproduce\nprogress\nproud\nrequire\nshooting\nshut\nstandards\ntells\nthinks\nvan\nwood\n"
    "background\nbirth\nbridge\ncarried\ncharles\nclasses\ncompleted\nconcept\ncopy\ndear\ndogs\ndrugs\n"
    "efforts\ngarden\nhost\nhousing\ninc\nisrael\njournal\nlabor\nleadership\nlength\nlucky\nneither\n"
    "onto\npatient\npossibly\nprove\nrare\nsetting\nskills\nsoftware\nthousands\ntough\nunits\nalive\n"
    "apple\nbalance\nbirthday\nbitch\nboss\ncards\nchanging\nconnection\ndress\neasier\nfellow\nflorida\n"
    "horse\nknowing\nliked\nmagic\nmanaged\nmap\nnet\nowned\nrequest\nstick\nturns\nvehicle\n"
    "volume\nwake\naid\nbeauty\nbelieved\nbillion\nbusy\nbuying\ncells\nconcerned\nconversation\ncorner\n"
    "criminal\ncultural\ndevelop\ndriver\nends\nexisting\nfarm\nfile\nfix\nfly\nfrank\nguide\n"
    "images\ninvestigation\nmexico\noperating\npaying\npresented\nraise\nresponsibility\nroll\nslightly\nsuggest\nsurprise\n"
    "technical\nthoughts\ntreat\nunique\nvariety\nviolence\nweapons\nyours\nyouth\nappreciate\nbigger\nbreaking\n"
    "discovered\ndont\ndry\nedge\nevil\nexcited\nforever\nfunds\nhelps\nhenry\ninjury\niron\n"
    "lovely\nmad\nmagazine\nmartin\nmodels\noffers\nordered\nparliament\nprepared\nreference\nreligion\nsites\n"
    "somewhere\nstated\nstrategy\nteachers\nweb\nwine\naccounts\nangeles\narm\naudience\nbay\nblog\n"
    "closer\ncore\ndemocratic\ndescription\ndropped\nexcellent\nexist\nfigures\nforms\nguard\nhonest\nissued\n"
    "joined\njones\nlee\nlies\nlikes\nmedicine\nmention\nmountain\nnuclear\norders\nport\npresence\n"
    "reaction\nreduce\nshoot\nsides\nsolid\nspanish\nsport\nsteps\nstress\ntaste\ntea\nvictory\n"
    "afternoon\nassistant\nbritain\ncitizens\nclassic\nclothes\ndecisions\nelectric\nemergency\nentered\nentirely\nfacts\n"
    "failure\nfestival\nflat\nfuel\nharry\nhello\nhouses\nill\ninitial\nintroduced\njohnson\nkick\n"
    "links\nmail\nmassive\nmatters\npair\npicked\npieces\nplane\nplenty\nprince\nproper\nproviding\n"
    "quarter\nregional\nscott\nsession\nshape\nsky\nteaching\ntoward\ntransfer\nupper\nuseful\nvalley\n"
    "watched\nwilling\nwindows\nzone\naccident\nadvanced\nalternative\nanywhere\narticles\nawards\nbear\nboat\n"
    "bringing\ncapacity\ncheap\nclimate\ncommunities\ndiscussion\ndrinking\nduty\nfantastic\nfeelings\nflying\ngovernor\n"
    "hundred\nindustrial\njoint\nmix\nmuseum\noptions\npath\nplants\npolicies\npromise\nproposed\npurchase\n"
    "rain\nremove\nsigns\nspending\nsteel\nsteve\nsupporting\nterrible\ntired\ntreated\nturning\nvice\n"
    "warm\nafraid\narts\nbeer\nborder\ncanadian\ncommand\ncrew\ncrowd\ndating\ndick\nelements\n"
    "enemy\nensure\nenvironmental\nfilled\nfixed\nforest\nintelligence\nintended\nlabour\nlimit\nmoon\nocean\n"
    "powers\nprofit\nproof\nrepublican\nsoldiers\nsuit\nwins\nappearance\nasian\nattorney\nbanks\nbehavior\n"
    "ben\nbodies\nbrothers\nbuildings\nchair\ncreating\ndebt\ndomestic\nexpensive\ngrew\nhistorical\nhomes\n"
    "honestly\nhonor\njump\nlaunch\nlisted\nminimum\nnative\nnoted\noriginally\nplanned\nray\nsets\n"
    "suddenly\nsupreme\nsurvey\ntech\ntrees\nupdate\nuser\nwriter\nyellow\nyounger\nancient\nattacks\n"
    "charges\ncombined\ncommunication\nconnected\ncontains\ndownload\nemail\nending\nexercise\nexpress\nflow\nformed\n"
    "girlfriend\nhero\nillegal\nincreasing\njoke\nloan\nmethods\nofficials\nperformed\nplanet\nrelationships\nrestaurant\n"
    "scotland\nselected\nshared\nshopping\nsoft\nstuck\nsugar\nsuggested\nsupported\nsurprised\ntaught\ntransport\n"
    "accepted\nadding\naffairs\nallows\nappeal\napplied\nappropriate\nartists\nboston\nconfirmed\ndevice\ndrama\n"
    "entry\nera\nfactor\nfeed\ngolden\ngrant\ngrown\nheads\nhoping\nkeeps\nlawyer\nlegs\n"
    "lying\nmeasures\nmistake\nmuslim\norganizations\nplatform\npool\npulled\nregarding\nrelations\nrequires\nroute\n"
    "saved\nschedule\nscientific\nshoes\nsmoke\nsquad\nteach\ntesting\ntests\nvalues\nwalked\nwilliams\n"
    "abuse\nangry\nbusinesses\ncandidate\ncomfortable\nconcern\ndeveloping\ndiscuss\nelections\nemotional\neverywhere\nfacilities\n"
    "falling\nfox\nguns\nhole\nholiday\ninterests\ninternal\nireland\nitalian\nitaly\njersey\nlaugh\n"
    "leg\nletters\nliberal\nlistening\nloves\nlunch\nmax\nmilk\npack\npayment\nperform\nrecorded\n"
    "relatively\nsector\nsharing\nsnow\nstorm\nstreets\nstrike\nstudio\nsub\nweak\nyoutube\nactor\n"
    "advance\napartment\nasia\nchain\nchapter\ncommitted\nconfidence\ncook\ncute\nequal\nfake\nfinance\n"
    "focused\nhits\nidentity\njourney\nkitchen\nkorea\nleads\nmaintain\nmeasure\nnumerous\nowners\nposts\n"
    "properties\nquiet\nrevealed\nspecifically\nsplit\ntask\ntaxes\ntaylor\ntwenty\nurban\nacts\naffected\n"
    "aircraft\napplications\napproved\napproximately\nargument\narrested\nclaimed\nconflict\nconsidering\ncorporate\ndebate\ndetermined\n"
    "distribution\ndocuments\nescape\nextended\nfactors\nfaster\nfault\nfill\nfilms\nflowers\nfriendly\nladies\n"
    "lay\nlights\nmillions\nmixed\nphase\nproperly\npure\nreduced\nrequirements\nresidents\nrevenue\nsam\n"
    "sat\nsecure\nsmile\nstrange\ntalent\ntemperature\nthousand\ntony\ntroops\ntruck\nvotes\nauthorities\n"
    "basically\nbesides\nbird\nblame\nbob\nbowl\ncauses\nchicken\ncollected\ncontext\ncoverage\ndetermine\n"
    "display\ndying\nelected\nexamples\nexperienced\nfalls\nfalse\nfired\nforgot\nfunding\nidentified\niii\n"
    "incredible\ninspired\nlaunched\nmeat\nministry\nmode\nneck\nnoticed\nnovel\nobvious\npassing\npositions\n"
    "remaining\nscored\nshirt\nshots\nslowly\nstadium\nstores\nsurgery\ntrading\ntuesday\nvision\nwhenever\n"
    "worried\nzero\nalex\nallowing\nbegins\nchampion\ncharged\ncream\ncrisis\ndaniel\ndelivered\neditor\n"
    "estimated\ngiant\niran\njail\njim\nkingdom\nliterature\nmayor\nminor\nmoments\nopposite\norange\n"
    "ourselves\npages\nremained\nselection\nserving\nsignal\nstream\nstruggle\nsuicide\ntalked\ntheme\nthursday\n"
    "tiny\ntypically\nunfortunately\nusual\nvehicles\nvirginia\nvoted\nvoting\nwalls\nwave\nalcohol\nassembly\n"
    "breakfast\nbright\nbrings\ncapable\ncarrying\nchosen\ncombination\nconservative\ncustomer\ncutting\ndesire\ndestroyed\n"
    "draft\ndrunk\nessential\nfail\nfamiliar\nfinds\ngranted\nguilty\nhumans\nhundreds\nimproved\njewish\n"
    "largely\nlaughing\nmarkets\nmedium\nohio\nopportunities\npapers\nperfectly\nrecommend\nreferred\nrelevant\nseek\n"
    "sending\nsolo\nspoke\nstands\ntalks\nticket\nunable\nupset\nwing\nanswers\nbirds\nbomb\n"
    "creative\ncycle\ndealing\ndirected\ndon\neducational\nentertainment\nextreme\nfacility\nfields\ngoods\nhang\n"
    "holds\ninfo\nmainly\nmaximum\nnewspaper\noffering\npainting\nrepublic\nreserve\nreturns\nrow\nsalt\n"
    "scared\nscottish\nshares\nstatistics\nswitch\nterritory\nthreat\ntickets\nwales\nadults\naffect\nappointed\n"
    "armed\naside\nassistance\nbell\nblow\nbond\nboyfriend\ncareful\ncircumstances\ncommunications\nconcerns\ncontrolled\n"
    "corporation\ncry\ndanger\ndeals\ndelivery\ndeserve\ndevices\ndollar\ndreams\nempty\nenjoyed\nexplained\n"
    "faces\nfolks\nfucked\ngender\ninstance\nkim\nkinda\nmatches\nmile\nmotion\nmoves\nnick\n"
    "pacific\nprize\nrealized\nreasonable\nreceiving\nregister\nresolution\nrural\nryan\nsaving\nsees\nsinging\n"
    "spain\ntools\ntypical\nuniverse\nwarning\nwars\nwednesday\nadmit\nattitude\nbranch\nbrazil\nconducted\n"
    "decades\ndedicated\ndefinition\ndrawing\nfavor\nflag\nframe\nguest\nheaven\nindependence\ninstitutions\njackson\n"
    "kiss\nload\nplot\npossibility\nrandom\nrecovery\nrent\nreplace\nrepresent\nreviews\nscenes\nseeking\n"
    "senator\nsentence\nteeth\ntips\ntrained\nunderstood\nacademic\nacademy\naccurate\nachieve\nadam\nafford\n"
    "andrew\nassume\nbbc\nbottle\nbunch\ncategory\nchat\ncheese\nchemical\nclinton\ncompetitive\ndetail\n"
    "diet\nfavourite\nfruit\nharder\nindex\nitem\nlane\nmess\nnavy\nnormally\noccurred\nopposition\n"
    "parent\npermanent\npersonally\npleasure\nprefer\nprogramme\nrepresentative\nscheme\nshift\nstood\nstorage\ntank\n"
    "tend\ntight\ntransportation\nultimately\nunlike\nweekly\nyard\nanybody\nassets\nbasketball\nbutton\ncandidates\n"
    "combat\nconstitution\nconsumer\ncounter\ncreation\ncrown\ncrying\ndefined\ndepending\ndepression\ndescribe\ndrivers\n"
    "employment\nexclusive\nexcuse\nexpert\nfrequently\ngolf\ngrace\nhopefully\nidentify\nimportance\nkevin\nlaid\n"
    "latter\nmanufacturing\nmining\nobject\npartners\npattern\nperforming\npersonnel\nperspective\npregnant\npremier\npromote\n"
    "revolution\nrooms\nsevere\nsleeping\nsuppose\ntool\ntournament\nturkey\nvictim\nvictims\nagents\namazon\n"
    "arrest\nattend\nban\nbrilliant\ncarbon\ncatholic\nchose\ncircle\nconcert\ncrash\ndeclared\ndeliver\n"
    "depth\ndeputy\ndirty\ndoctors\nearned\nelectronic\nerror\nexistence\nexperiences\nexpression\nfactory\nheaded\n"
    "interior\njoy\nlegislation\nmaintenance\nmanner\nmate\nmatt\nnearby\nnoise\norigin\npakistan\npanel\n"
    "personality\nplate\npractices\nprepare\nrelief\nreplaced\nresistance\nretail\nrice\nroads\nroof\nshame\n"
    "ships\nsomewhat\nstaying\nstronger\nsurely\ntip\nupdated\nwriters\nabsolute\nadvertising\nagencies\nbaseball\n"
    "bathroom\nbible\ncable\ncalm\nchampionship\nchecked\nclient\nconstant\ndates\ndegrees\ndemocrats\ndoors\n"
    "driven\ndumb\nempire\nexciting\nexpansion\nheavily\nhide\nincident\nirish\nlinked\nmanage\nmessages\n"
    "michigan\nmulti\nnfl\npoliticians\nprint\nquit\nrefused\nreporting\nsight\nsignificantly\nsing\nsoviet\n"
    "weapon\nwet\nwidely\nworldwide\nages\nanniversary\nattractive\nbike\nbroad\nburn\ncake\ncausing\n"
    "closely\nconstantly\ncontest\ndeaths\ndepends\ndrawn\nfees\nfrancisco\nhaha\nhardly\nhat\nheight\n"
    "hidden\nhong\ninvited\nletting\nloud\nmanchester\nmarine\nmotor\nofficially\npeak\nportion\npounds\n"
    "princess\nprotein\nputs\nraw\nreform\nregions\nrepresented\nrespond\nretirement\nsample\nseats\nsecondary\n"
    "solar\nsomehow\nstayed\nsuffering\nsydney\ntries\nultimate\nunknown\nwilson\nwondering\nattached\nattacked\n"
    "automatically\nballs\nbattery\nbills\nblind\nbreath\nbrief\ncarolina\nchest\nconduct\ndebut\ndecade\n"
    "destroy\ndifferences\nedward\nengaged\nexperts\nexpressed\nexternal\nfantasy\ngrab\nhollywood\nimmediate\nintroduction\n"
    "joseph\nlicense\npaint\npilot\npink\npresidential\nprincipal\nrecognize\nrecognized\nregistered\nregularly\nrepresentatives\n"
    "rising\nseasons\nshipping\nsinger\nsmoking\nsteam\nsuffered\nsurvive\ntall\nthats\ntheatre\ntherapy\n"
    "witness\nadopted\naim\ncampus\ncap\nchances\nchildhood\nclinical\nclubs\ncomedy\ncommander\ncomparison\n"
    "covers\ndan\ndefeat\ndefence\ndemocracy\ndetailed\nentitled\nexact\nexposed\nfed\nfee\ninjured\n"
    "jan\njordan\nkinds\nlets\nloans\nlock\nmusical\nnose\nobjects\nopposed\norganized\nplastic\n"
    "protected\npurposes\nquote\nrecording\nsemi\nstatements\nsuspect\nswear\ntechniques\ntie\ntim\ntrend\n"
    "valuable\nwealth\nwise\nyards\naged\napproval\naspects\nattempts\nbread\nburning\nchampions\ncontain\n"
    "convention\ndancing\ndocument\neggs\nemployee\nengineer\nequivalent\nfacing\nfairly\nfingers\nford\nfounded\n"
    "functions\ngang\ngraduate\ngreek\nhanging\ninner\nislands\nlift\nmarked\nmemories\nmiller\nmonthly\n"
    "mountains\nneighborhood\noperate\noutstanding\npermission\nporn\nracing\nrecommended\nregulations\nreply\nrepublicans\nrid\n"
    "roman\nscientists\nshoulder\nshower\nsolutions\nsons\nstations\nstephen\ntower\ntradition\nvisited\nvisual\n"
    "wheel\nzealand\nachieved\nadmitted\nappointment\nauthors\nbarely\nbush\ncabinet\ncelebrate\nchallenges\nchocolate\n"
    "coal\ncolour\ncontemporary\ncriticism\ndavis\ndna\neffectively\neric\nextensive\nfaced\nfiled\nformation\n"
    "fought\ngained\ngallery\nhighway\nhistoric\nhunt\nimprovement\ninch\ninitially\njunior\njury\nkong\n"
    "korean\nmarks\nmonster\nobtained\nolympic\nphilosophy\npride\npromised\nrepeat\nreturning\nriding\nrough\n"
    "santa\nsettlement\nsmell\nsought\nspeaker\nstudied\nsuggests\nsurrounding\ntone\ntopic\ntoronto\nuniversal\n"
    "vast\nvisitors\nwanting\nauto\nconsistent\ncontinuing\nearn\nexists\nfinger\ngrey\nguitar\nheading\n"
    "howard\nignore\ninvolving\nlatin\nlewis\nmeal\nmeanwhile\nmeetings\nnaturally\nnecessarily\noffices\npants\n"
    "partnership\npayments\npercentage\npocket\npractical\nprimarily\nproved\nrape\nregardless\nrelative\nrepresents\nrescue\n"
    "resulting\nrush\nsarah\nsessions\nsharp\nsimon\nsoccer\nstable\nstructures\nsupplies\nsymptoms\ntemporary\n"
    "tested\ntrick\nattended\naudio\nbone\nbrian\nbullshit\nchamber\nchart\ncircuit\nclothing\ncomplicated\n"
    "confused\nconsequences\ndefend\ndivided\nelizabeth\neveryday\nextent\nfishing\nformat\ngap\ngate\ngotten\n"
    "harm\nhealthcare\nhousehold\nimmigration\nimpressive\njews\njoining\nkiller\nlesson\nlimits\nloving\nltd\n"
    "managers\nmembership\nmiami\nmirror\nmount\nnights\noccur\nparking\nproposal\nprovince\npurchased\nrecognition\n"
    "reputation\nrolling\nshortly\nsituations\nstrongly\ntears\ntechnique\nthin\ntied\naccused\nadventure\nargue\n"
    "assessment\natmosphere\nawful\nbedroom\nbelief\nbound\nbreaks\ncarefully\ncats\nceo\nchoices\nclosing\n"
    "cloud\ncolorado\ncolors\ncontrast\ncourses\ncourts\ndonald\ndrew\negg\nelement\nelsewhere\nestablish\n"
    "extension\nfiles\nfounder\ngear\ngeorgia\nhills\nhip\nhitting\nincreases\ninfrastructure\njason\nlocations\n"
    "loose\nmachines\nmoral\noffensive\npackage\npointed\npoverty\nprocesses\nprocessing\nqualified\nrailway\nreaching\n"
    "ridiculous\nsensitive\nserver\nshock\nsilence\nsoldier\nsuperior\nsupporters\nthick\nthrew\ntons\ntransition\n"
    "violent\nvoters\nwash\nacid\nactress\nadministrative\nalan\nalongside\nangel\nanxiety\nbabies\nbars\n"
    "bonus\ncastle\ncharity\nclients\ncompare\ncontained\ncooking\ncovering\ncurious\ndirectors\ndiscovery\ndiscussed\n"
    "duke\negypt\nencourage\nenforcement\nfeaturing\nfinals\nflash\nformal\nformula\nfort\ngovernments\ngray\n"
    "gross\nhorses\nhungry\ninformed\ninnocent\njeff\nlosses\nluke\nmac\nmath\nminds\nmistakes\n"
    "mystery\nnetworks\nolympics\npalace\npasses\npenalty\npet\nphones\nphotography\nproducing\nprotest\npublication\n"
    "rating\nrefer\nrespectively\nrome\nscheduled\nselect\nsilent\nspoken\nsuccessfully\nsuffer\ntemple\ntracks\n"
    "trail\nuncle\nunusual\nwaters\nwoods\narrival\nasks\nassault\nawareness\nbadly\nbath\ncaptured\n"
    "chase\ncomponents\nconcrete\ndave\ndeeply\nexpectations\nexplanation\nexposure\nfeatured\nfiction\nguarantee\nhappiness\n"
    "harris\nhearts\nhorrible\nideal\nillinois\ninjuries\nislamic\njimmy\nkelly\nlegend\nlieutenant\nmini\n"
    "mood\nmuscle\nmuslims\npassion\npicking\npleased\nprocedure\nproducer\npushing\nrank\nreplacement\nretired\n"
    "roles\nsand\nsavings\nsettled\nshadow\nsingles\ntag\ntape\nthread\nvictoria\nvisiting\nwage\n"
    "wings\nandy\navenue\nbags\nbeating\nbelieves\nblocks\nboring\ncharlie\nchecking\nclock\ncommissioner\n"
    "commitment\nconfident\ncontaining\ncopies\ncrimes\ncustom\ndenied\ndesk\ndrinks\near\nelectricity\nepisodes\n"
    "farmers\nfbi\ngrounds\ngym\nhelpful\nhorror\niphone\niraq\nlabel\nliverpool\nlocked\nnaked\n"
    "opens\noutput\npersons\npitch\npizza\nplain\npushed\nraising\nrear\nreveal\nromantic\nscores\n"
    "sisters\nspeaks\nstages\nstrategic\nswimming\nwelfare\nwinners\nwire\nworker\nafterwards\nalright\nandroid\n"
    "anger\narchitecture\nassist\nattempted\nbehalf\nbelt\ncapture\ncenters\nceremony\ncomic\ncops\ncuts\n"
    "dallas\ndesigner\ndiamond\ndisappointed\ndressed\neconomics\nefficient\nelectrical\nemployed\nenjoying\nentering\nessentially\n"
    "establishment\nexpecting\nexplains\nflower\nghost\nguests\nhanded\nhockey\nhouston\nhttps\nhunting\nindustries\n"
    "islam\njane\njudges\nkit\nlab\nlanguages\nmaps\nmin\nmorgan\nmoscow\nnervous\nnewly\n"
    "odd\nordinary\nparticipate\nphiladelphia\nprayer\nprinciples\nracist\nrarely\nreferences\nsexy\nskill\nsoil\n"
    "solve\nstomach\nstruck\nstudying\nsuck\nsupports\ntrash\nugly\nvegas\nvirus\nwalker\nwhoever\n"
    "amounts\nanthony\narthur\naspect\nbanned\nboost\nbureau\ncolonel\ncomfort\ncontrols\ncousin\ncrack\n"
    "deck\ndemands\ndies\ndragon\ndramatic\ndust\ndutch\nengineers\nevolution\nfoods\nhired\nillness\n"
    "inspiration\ninstitution\nkings\nknife\nlately\nlowest\nmemorial\nmexican\nminority\nmum\nopinions\npatterns\n"
    "presents\npriority\npromotion\nrail\nreaders\nremote\nrepair\nroot\nsaint\nsteal\nstolen\ntelephone\n"
    "tho\ntitles\ntrans\nups\nvol\nwhereas\nabandoned\nacquired\nactors\nalexander\nalliance\nannoying\n"
    "bid\nbro\nbuddy\nburied\nbutter\ncares\ncolumbia\nconclusion\nconfirm\ncongratulations\ncontracts\nconvinced\n"
    "crap\ncrystal\ndean\ndecent\ndecline\ndelay\ndescribes\ndesert\ndowntown\nelite\nenemies\nforgotten\n"
    "forth\ngods\nhire\nhop\nhopes\ninsane\ninstalled\nisraeli\nlanding\nlayer\nmanaging\nmarry\n"
    "nah\nnowhere\nnurse\nobtain\norganic\nownership\nparticipants\npennsylvania\npoetry\npot\npray\nprinted\n"
    "recall\nrugby\nsake\nsheet\nsigning\nsmooth\nspiritual\nstops\nstring\nsudden\nsweden\nsyria\n"
    "throwing\nthrown\nvacation\nabroad\narab\nassigned\nassociate\nassumed\natlantic\nbench\nbother\nbroadcast\n"
    "bye\ncambridge\ncitizen\ncleaning\ncompete\nconsists\nconsumers\ncontributed\ncricket\ncritics\ndamaged\ndisaster\n"
    "discover\ndisney\nentrance\nequally\nfallen\nfigured\nfitness\nfrancis\nfriendship\ngary\nhandling\nidiot\n"
    "intense\nkeys\nlawyers\nlifetime\nliquid\nmakeup\nmedal\nmortgage\nnarrative\nnarrow\nnba\nobserved\n"
    "occasionally\npan\nphysics\nposting\npotentially\nreduction\nreflect\nrefuse\nresearchers\nresource\nroger\nross\n"
    "sciences\nseattle\nserves\nshell\nsilly\nsubsequent\ntowns\ntranslation\nvisible\nyep\nadds\nallen\n"
    "amendment\nangle\narizona\narrive\nbelong\nberlin\nbishop\nchannels\nclark\ncommonly\nconnect\ndefensive\n"
    "designs\nefficiency\nenterprise\nexperiment\nfeb\nfemales\nfindings\nfirms\nforum\ngifts\ngrass\nhence\n"
    "increasingly\nincredibly\njay\njournalist\nkicked\nlessons\nlists\nmaintained\nmill\noccasion\noxford\npace\n"
    "passenger\npen\npope\npossession\nraces\nrapid\nregulation\nresident\nrocks\nshaped\nsixth\nspin\n"
    "styles\nsubjects\nsucks\nsuitable\nthirty\nvalid\nvital\nwhilst\nagriculture\nalleged\nanna\natlanta\n"
    "bands\nchristians\ncollect\ncommerce\ncop\ncreek\ncurrency\nemotions\nexhibition\nfraud\nfuneral\ngenuine\n"
    "gordon\nhoney\nhonour\nhook\nhunter\nimmigrants\nimproving\ninstructions\nintroduce\nkansas\nlands\nlegacy\n"
    "log\nmatthew\nmerely\nmonitor\nnov\npatrick\nphil\nprisoners\nprogramming\npublishing\nratio\nregret\n"
    "rejected\nremind\nresort\nresulted\nreverse\nroutine\nscary\nseed\nsettle\nsin\nspell\nsummary\n"
    "survival\nsword\ntongue\nward\nwaves\nwayne\nachievement\nanderson\nargued\nasleep\naustin\nautomatic\n"
    "begun\nbehaviour\ncents\ncoat\ncomprehensive\nconsent\ndaddy\ndestruction\ndiego\ndiseases\ndivorce\ndoc\n"
    "drove\nears\nengage\nextraordinary\nfate\nfrequency\ngaming\ngene\nglory\nheadquarters\nheritage\ninitiative\n"
    "interviews\njean\njuice\nlandscape\nlogic\nmeets\nmelbourne\nmicrosoft\nobjective\norganisation\nprivacy\nprocedures\n"
    "profits\nreducing\nregard\nrepresenting\nresidence\nroughly\nsalary\nscoring\nscript\nsearching\nsections\nstrip\n"
    "surrounded\nthreatened\ntransferred\ntube\nuniversities\nwalter\nwisconsin\nwrites\nambassador\nann\napps\nawarded\n"
    "banking\nbreast\ncant\ncarter\nchelsea\nchemistry\nconcluded\nconsumption\ncorruption\ncotton\ncrossed\ndetroit\n"
    "discount\ndozen\nengines\nepic\nexception\nexit\nexpand\nfancy\ngorgeous\ngrateful\nheroes\nholes\n"
    "impression\ninches\nindicate\ninput\njohnny\njosh\nknock\nleather\nlips\nluxury\nlyrics\nmanufacturers\n"
    "masters\nmovements\noct\noperated\nought\noutcome\npainted\npoll\npreferred\npulling\nranked\nreferring\n"
    "removal\nrep\nreporter\nrio\nrisks\nrob\nscreaming\nsept\nsequence\nsingapore\nstretch\ntear\n"
    "tennis\nterrorist\ntheater\nties\ntwelve\nversions\nvirgin\nvoices\nwishes\nwolf\nabsence\nagricultural\n"
    "asshole\nate\nathletes\nbears\nblues\nboxes\nbruce\nbull\ncameras\ncommonwealth\ncontribute\ncontribution\n"
    "contributions\ncouples\ndelicious\ndeny\ndeserves\nease\nextend\nfame\nflood\ngenerated\ngenetic\nglasses\n"
    "impressed\nindicated\ninstant\ninvestors\ninvolves\nkate\nkills\nliberty\nmaria\nministers\nmonitoring\noccurs\n"
    "passengers\nphotographs\nprinciple\nproducers\nprogressive\npunishment\nrally\nrapidly\nreader\nrepresentation\nrestaurants\nreveals\n"
    "roots\nsamples\nshops\nsum\nswing\ntail\ntexts\ntwin\nupcoming\nveterans\nalert\narena\n"
    "arguments\naug\nbilly\nboom\nboots\nbrave\nclaiming\ncolumn\ncommit\ncompensation\ncomposition\ncomputers\n"
    "conservation\nconstitutional\ncrossing\ndefending\ndensity\ndifficulty\ndropping\ndrops\nelementary\nethnic\nexpenses\nfleet\n"
    "foster\nfuckin\nfundamental\ngen\ngenius\ngreatly\nguidance\nhospitals\ninfection\ninstagram\nintention\niowa\n"
    "jokes\nknee\nmechanical\nnigeria\nparks\nparticipation\nperiods\nprecious\npregnancy\npremium\npreparing\npretend\n"
    "priest\nprominent\nproven\nradical\nremembered\nrequested\nresidential\nreward\nrings\nrobin\nrussell\nsatellite\n"
    "shake\nshore\nspots\nstats\nstruggling\nsubstantial\nteen\ntemperatures\ntransmission\ntrap\nuniform\nwildlife\n"
    "wooden\nads\naggressive\nanne\nanswered\napparent\nbang\nblast\nbones\nbrands\ncenturies\ncommunist\n"
    "complaint\ncomponent\nconnections\ncourage\ncure\ndel\ndesperate\ndiversity\nduties\nencouraged\neve\nfaculty\n"
    "feedback\nfighter\nfrozen\nguards\nhiding\nhumanity\nian\ninnovation\ninstruments\ninvest\njacket\njustin\n"
    "legislative\nlisting\nmanual\nmothers\nmurdered\nnursing\noccupied\nongoing\noperator\npainful\npound\npreparation\n"
    "punch\npurple\nrailroad\nregistration\nreleases\nrick\nromance\nsubmitted\nsufficient\nsurvived\nsuspended\ntechnologies\n"
    "tissue\ntrailer\ntrends\ntrials\nukraine\nunderground\nversus\nvirtual\nwalks\nwounded\nali\namongst\n"
    "announcement\narranged\narsenal\nattending\nattracted\nbiological\nbite\nblocked\nboards\nburned\ncategories\nchecks\n"
    "chip\nconcerning\ndare\ndatabase\ndefine\ndiscrimination\ndisorder\ndistributed\ndistricts\ndocumentary\ndomain\ndynamic\n"
    "edited\nengagement\nexplore\nfavour\nfewer\nfootage\ngiants\ngrave\nhamilton\nimplementation\nindiana\ninvestigate\n"
    "jazz\njon\njonathan\nlaboratory\nlawrence\nlincoln\nliterary\nmask\nmassachusetts\nmidnight\nminnesota\nmouse\n"
    "oscar\npacked\npiano\npraise\npresentation\npsychology\nrelation\nrestrictions\nrocket\nruin\nsaudi\nsean\n"
    "sec\nsecrets\nslave\nstability\nsteady\nstones\nsymbol\nterminal\ntoilet\ntreaty\ntriple\nunlikely\n"
    "updates\nvietnam\nviewed\naffair\nagenda\nbat\nbow\ncalendar\ncape\ncollective\nconversations\ncooperation\n"
    "craft\ndarkness\ndeeper\ndevil\nedit\nenable\nequity\nestimates\nfailing\nfinishing\nfortune\ngates\n"
    "goodbye\ngraham\nhardware\nhillary\nhurts\nintellectual\ninvite\ninvolvement\nkentucky\nmadrid\nnuts\noregon\n"
    "partly\npetition\nphrase\nphysically\nprotecting\nracial\nrated\nregime\nrivers\nrounds\nruled\nsauce\n"
    "seal\nseparated\nshield\nsimilarly\nslide\nstem\nsummit\ntalented\nthroat\ntiger\ntouched\ntoy\n"
    "visits\nwarriors\nwisdom\naccounting\nalien\nattacking\nawkward\nbeast\nbeef\ncandy\ncarrier\ncelebration\n"
    "celebrity\ncertificate\ncited\nclay\ncoaching\ncolleagues\nconstructed\ndated\ndec\ndefault\ndelhi\nderived\n"
    "dialogue\ndisabled\ndistinct\ndrag\neducated\neligible\nestimate\nexecution\nexisted\nfifty\nfollowers\nfool\n"
    "framework\nfranchise\nfunded\nfurniture\ngenerations\nguaranteed\nintegrated\nintelligent\ninteraction\njet\njournalists\nlifestyle\n"
    "lighting\nlisa\nloop\nmall\noverseas\nperformances\nphilippines\npolish\nrecommendations\nrecover\nregarded\nrelax\n"
    "reliable\nrely\nremarkable\nresponses\nruling\nsacrifice\nsole\nstopping\nstrategies\nsucceed\ntables\ntale\n"
    "targets\ntiming\nton\nvolunteers\nwitnesses\nwore\nworship\nworthy\nacted\nalarm\nbass\nbloody\n"
    "breathing\nbutt\ncharacteristics\ncnn\ncollaboration\ncon\nconsideration\ncounts\ncreates\ncrucial\ndaughters\ndependent\n"
    "discussions\ndrives\ndual\nedinburgh\nequipped\nexpanded\nexperimental\nfeeding\nfilter\ngalaxy\nglobe\ngrades\n"
    "greece\ngulf\nhighlights\nhoped\nintent\ninvolve\njudgment\nkennedy\nknight\nlarry\nlas\nlmao\n"
    "logo\nmalaysia\nmature\nmoore\nnazi\nnetherlands\nodds\npeaceful\nphilip\nphotographer\npin\nprevention\n"
    "printing\npromoting\npublicly\npump\nrepeated\nreplied\nrequests\nrevenge\nsatisfied\nseeds\nsignals\nslip\n"
    "spaces\nspare\nspecialist\nstocks\nstranger\nsubmit\nsurprising\ntap\nthompson\nthreats\ntourism\nturkish\n"
    "volunteer\nacceptable\nallies\nattempting\nauction\nbonds\nchallenging\nchaos\nchurches\ncleveland\ncomposed\nconcentration\n"
    "copper\ncorp\ncorps\ncounting\ncredits\ndawn\ndispute\nearnings\nediting\nexecuted\nfiring\nfits\n"
    "frequent\ngardens\ngathered\nhilarious\nhuh\nignored\nimprovements\ninvestments\nisis\nmargin\nmars\nmaryland\n"
    "mechanism\nmoderate\nmurray\noklahoma\nopera\novercome\nparallel\npassage\npit\npsychological\npublications\nquest\n"
    "radiation\nshocked\nsized\nstroke\nstunning\ntanks\ntokyo\ntopics\ntrains\ntraveling\ntreating\ntune\n"
    "utility\nvessel\nweed\nwherever\nacquisition\naddressed\nalabama\nalice\nangels\nanime\nannounce\nautumn\n"
    "backed\nbarry\nbold\nborders\nbreathe\ncameron\nchoosing\nclassical\nclassified\nclip\ncoaches\ncoins\n"
    "concepts\nconspiracy\ncontroversy\nconvince\ncooper\ndisappeared\nencounter\nequality\nexam\nexamination\nfails\nfederation\n"
    "fiscal\nguardian\nhomeless\ninstrument\nintervention\njerry\nlover\nmainstream\nmenu\nmissouri\nmounted\nmutual\n"
    "nope\noccasions\noffense\noral\npanic\npays\npeoples\npursue\nrealise\nrefugees\nremoving\nrequirement\n"
    "responded\nrip\nruined\nscope\nsegment\nspectrum\nstays\nted\nterror\nventure\nvirtually\nwaited\n"
    "warren\nworn\nyea\naccompanied\nadams\naids\naimed\nalpha\napproaches\narguing\narrangement\nbeliefs\n"
    "boats\nboundaries\nbrick\nbrooklyn\ncolleges\nconsiderable\nconventional\ndanny\ndes\ndesignated\ndvd\nemperor\n"
    "employers\nenormous\nerrors\nfocusing\nforgive\ngains\ngarage\ngathering\nguidelines\nhandled\nhosted\nindians\n"
    "indonesia\ninquiry\ninspector\njumped\nkhan\nlion\nloaded\nlonely\nmaintaining\nmeasured\nmercy\nnevertheless\n"
    "newspapers\nouter\noxygen\npipe\npissed\npoem\npowder\npowered\npromises\nquotes\nracism\nratings\n"
    "reads\nrecovered\nrefers\nroy\nrude\nscrew\nseventh\nshelter\nsignature\nsooner\nspider\nstewart\n"
    "strikes\nsuggesting\nsuits\ntoys\ntracking\ntribute\ntrigger\nvary\nvenue\nwages\nwells\nwheels\n"
    "abc\nabortion\naccuracy\nalbert\napplying\nartificial\nbelongs\nbeneath\nbitcoin\nbullet\nburns\ncarl\n"
    "celebrated\nconsistently\nconversion\ncopyright\ncounties\ndemocrat\ndeposit\ndestination\ndirt\ndiverse\ndivine\nemails\n"
    "exclusively\nexport\nfastest\nformerly\nfunctional\ngather\ngrandfather\nhabit\nharvard\nindicates\nisolated\njealous\n"
    "knocked\nlanded\nlaughed\nlaura\nlazy\nmama\nmarshall\nmitchell\nmodified\nmunicipal\nnaval\nneighbors\n"
    "nelson\nneutral\nnoble\noldest\npat\npicks\npoland\npopularity\nprofessionals\npussy\nreactions\nrelate\n"
    "robot\nsacred\nsecurities\nshoe\nspeakers\nsprings\nspy\nsteven\nsuggestions\nsupplied\nsusan\nsuspension\n"
    "terrorism\nterry\ntoxic\ntreasury\ntunnel\nunions\nupgrade\nwarrant\nwider\nwound\naaron\nactively\n"
    "afghanistan\napplies\narrangements\nasset\nassuming\nbacking\nbaker\nbarcelona\nblessed\nbrazilian\nbrush\nburden\n"
    "campbell\ncarries\ncasual\ncertified\ncharter\nchef\ncivilian\ncoalition\ncock\ncomplain\ncomplaints\ncontroversial\n"
    "denver\ndescribing\ndifferently\ndirections\ndiscipline\ndiscussing\ndisgusting\ndominant\nearning\nemma\nessay\nexpense\n"
    "explaining\nfurthermore\ngraphic\ngreg\nhealing\nhiring\nhosts\nimplemented\ninstantly\ninvasion\njacob\njumping\n"
    "laptop\nlegendary\nleo\nmaker\nmargaret\nmario\nopponents\noutdoor\npalm\nparker\nphotograph\npole\n"
    "pub\nquarters\nqueensland\nrangers\nranks\nreception\nrecipe\nregulatory\nreviewed\nrolls\nrubber\nsecured\n"
    "serial\nsettings\nshed\nsnake\nsponsored\nstealing\nstrict\nsubsequently\nsubstance\nsuggestion\nswitzerland\nsyndrome\n"
    "tasks\ntrips\nultra\nunexpected\nusage\nutah\nworlds\naccidentally\naffordable\namateur\nappeals\nargentina\n"
    "baltimore\nbatman\nbearing\nbeats\nbin\nbiology\nbobby\nbriefly\ncanal\ncancelled\ncharlotte\ncheaper\n"
    "christopher\nclimb\ncom\ncompeting\ncompletion\ncruise\ncustody\ndelete\ndemonstrated\ndeparture\ndevelopers\ndevelopments\n"
    "dig\neagles\nemployer\nevans\nexplosion\nfever\nfluid\nfolk\ngenerate\ngop\nhandsome\nholidays\n"
    "hotels\nimagination\nintegration\nintegrity\ninterpretation\nleaf\nlegitimate\nlightning\nloads\nlongest\nmagical\nmills\n"
    "motivation\nnasty\noliver\noutfit\npension\npermit\nperry\nplates\npleasant\nportrait\nproductive\nreminds\n"
    "reserves\nron\nsafely\nshirts\nshorter\nslight\nsocialist\nstreaming\nsue\ntargeted\ntension\nthailand\n"
    "theories\ntouching\ntransactions\ntwist\nugh\nunemployment\nunity\nuseless\nviewers\nwinds\nwoke\nwtf\n"
    "abilities\nadvocate\naims\narc\nbackup\nbeaten\nbitter\nblown\nbranches\ncampaigns\nchips\ncia\n"
    "clever\nclinic\nclosest\ncollections\ncontinuous\nconverted\ncorrectly\ncreator\ncreatures\ncriteria\ndeclined\ndetective\n"
    "difficulties\ndisability\ndish\ndouglas\nduck\negyptian\nevaluation\nexcess\nfarming\nfence\nfifa\nfighters\n"
    "flights\nforcing\nforming\nfranklin\nfred\ngradually\ngravity\nhabits\nhawaii\nhighlight\nholder\nhood\n"
    "hung\nidentical\nimperial\ninvestigations\njose\nken\nlegally\nlied\nlistened\nmales\nmanufacturer\nmeters\n"
    "nail\nnasa\nnegotiations\nnonsense\nontario\noperational\norleans\nowns\nphoenix\nplayoffs\npoet\nquoted\n"
    "relating\nrepeatedly\nrobinson\nrolled\nscientist\nsink\nskip\nslavery\nsnap\nsorts\nsouls\nstole\n"
    "swedish\nswim\nswiss\ntennessee\ntransaction\ntransformation\nveteran\nvulnerable\nwealthy\nadditionally\namy\nattract\n"
    "barbara\nbeta\nblowing\nbored\nbronze\nbug\ncaring\ncatching\ncave\ncheating\nchronic\ncleared\n"
    "communicate\nconvicted\ncultures\ndealt\ndelayed\ndemonstrate\ndepartments\ndepend\ndeveloper\ndiagnosis\ndismissed\ndistinguished\n"
    "dose\neighth\nexperiments\nflesh\nflip\nforty\ngenerous\ngermans\nhated\nimplement\nincorporated\ninfluenced\n"
    "jerusalem\nkidding\nlaser\nloyal\nmarijuana\nmentally\nmissions\noccupation\nopponent\npaintings\npatch\npatience\n"
    "pic\npointing\npollution\nprecisely\nprisoner\nprivilege\nproposals\nprotests\npunk\nradar\nregards\nrelatives\n"
    "resist\nsolely\nstepped\nstriking\nterrorists\ntourist\ntransit\ntrucks\ntrusted\nvessels\nvilla\nvolumes\n"
    "websites\nwireless\nwondered\nwrap\nwright\nyoga\nadopt\nairlines\nalaska\nalbums\nanytime\nbacteria\n"
    "beings\nbeside\nblade\nboot\nbottles\nbucks\nbulk\ncamps\ncargo\ncensus\nchristianity\ncoastal\n"
    "coin\ncolored\ncommentary\nconfusion\ncongressional\ncorn\ncried\ncustoms\ndealer\ndeemed\ndestiny\ndistant\n"
    "electronics\nemerging\nemotion\nemphasis\nethics\nexcitement\nexploration\nfights\nfilling\nfilming\nglasgow\ngraphics\n"
    "helen\nhumor\ninsight\ninvested\njennifer\nlit\nlouisiana\nmar\nmarie\nmeals\nmississippi\nnerve\n"
    "netflix\nnightmare\noperators\novernight\npartially\nparticipating\npie\nplatforms\npopulations\nposter\npractically\npreserve\n"
    "produces\nqualify\nraid\nram\nranging\nranking\nreceives\nrespective\nrestricted\nroutes\nsamuel\nsandy\n"
    "scenario\nsheep\nsituated\nslaves\nsony\nspotted\nspreading\nstanley\nsustainable\nsustained\ntaxi\nthemes\n"
    "threatening\ntobacco\ntrace\ntrapped\nturner\nuncomfortable\nwasted\nweakness\nwidespread\nxbox\naccepting\naccessible\n"
    "acknowledge\nadvised\nadvisory\nanimation\nassignment\nbalanced\nbare\nbasement\nbases\nbattles\nbias\nbirmingham\n"
    "bits\ncancel\ncarpet\nceiling\ncherry\nchill\nclassification\nclue\ncodes\ncole\ncollapse\ncollecting\n"
    "compound\nconscious\nconsecutive\ncontents\ncostume\ncraig\ndeleted\ndevoted\ndidnt\ndisplayed\ndominated\nearl\n"
    "endless\nescaped\nexamine\nfloating\ngarbage\ngospel\ngrain\ngrid\ngrows\nheating\nidentification\nknees\n"
    "lap\nlions\nliver\nmetro\nmetropolitan\nmines\nmixture\nnominated\noak\nparliamentary\npatent\nperception\n"
    "physician\nportland\nproceed\nproceedings\npupils\nreserved\nrestore\nrifle\nrival\nrunner\nsadly\nshoulders\n"
    "significance\nsits\nsizes\nslept\nsoap\nspray\nstored\nstressed\nstructural\nsuite\ntbh\ntropical\n"
    "ukrainian\nunnecessary\nverse\nvictor\nvintage\nwarned\nwatson\nacres\nadapted\nadoption\nanonymous\nantonio\n"
    "approaching\nartistic\nattendance\naviation\nbarrel\nbeds\nbeloved\nbless\nboxing\ncelebrating\ncharging\nchemicals\n"
    "chuck\ncinema\ncolonial\ncomics\ncompliance\ncontrary\ncontrolling\ncorporations\ncouch\ncrush\ndam\ndecrease\n"
    "defeated\ndiabetes\ndressing\nexpanding\nfears\nfires\ngenre\ngentle\ngrammar\nhiv\nidk\nillustrated\n"
    "invented\njake\njam\njamie\njessica\nkeith\nkent\nlayers\nlease\nlens\nlicensed\nloyalty\n"
    "madison\nmagnetic\nmetres\nmonsters\nmysterious\nnotion\npartial\npiss\nplacing\npropaganda\nrat\nreflection\n"
    "reminded\nresolve\nrevolutionary\nscandal\nshine\nsimultaneously\nsubstitute\nsurveillance\ntactics\ntestimony\nthai\ntreasure\n"
    "trophy\ntweet\ntyler\nunderlying\nunfair\nvillages\nvon\nacceptance\naccidents\naffects\nannually\napologize\n"
    "appreciated\napproached\narriving\nash\naunt\nbenjamin\nblake\nbubble\nbuyers\ncasino\ncharts\nclouds\n"
    "connecting\ncounsel\ncreature\ndeadly\ndecides\nder\ndesired\ndetermination\nembrace\nemerged\nexhibit\nflew\n"
    "gentleman\nhalloween\nhammer\nhitler\nhosting\nicon\nimposed\nindigenous\ninfinite\ninstallation\ninter\ninteractions\n"
    "introducing\niranian\nkicking\nlaying\nlegislature\nliability\nmaine\nmakers\nmanhattan\nmarathon\nmarvel\nmichelle\n"
    "moreover\nmps\nneil\norganisations\nours\nparade\nparadise\nperceived\npics\nplanes\npolitician\npreliminary\n"
    "premiere\npresidency\nreaches\nreact\nrealistic\nremarks\nretain\nroberts\nrocky\nrussians\nsaints\nsatisfaction\n"
    "scratch\nshade\nsheets\nsheriff\nshy\nsometime\nspirits\nsporting\nstrictly\nsunshine\nteens\nthou\n"
    "tier\ntommy\ntravelling\nvancouver\nvocal\nwarrior\nworries\nyield\naccomplished\nadmission\nadventures\naka\n"
    "appearing\nbacon\nbarrier\nbelgium\nbelieving\nblacks\nbombs\nburst\ncaps\ncasting\ncattle\nclassroom\n"
    "collins\ncolours\ncompromise\nconvenient\ncosta\ncriminals\ncrop\nearthquake\nelderly\neliminate\nembarrassing\nfarmer\n"
    "finest\ngrants\nharbor\nharvey\nhates\nincidents\ninform\nion\njeremy\nlesbian\nlovers\nmathematics\n"
    "medication\nminded\nmorris\nnorway\npar\npodcast\nportfolio\nproductivity\npromoted\nprotocol\nquietly\nrachel\n"
    "replacing\nresponsibilities\nsalad\nscholarship\nscreening\nsends\nsmiling\nsoup\nsoutheast\nstake\nstating\nstrain\n"
    "suspected\nswift\ntackle\ntigers\ntimeline\ntorture\ntraded\ntranslated\ntricks\ntwins\nurgent\nvegetables\n"
    "vertical\nviolation\nwallet\nwelsh\nworkshop\nwrapped\naboard\nabstract\naccent\naddiction\nassociates\nawake\n"
    "beam\nbeans\nbinding\nblank\nbuffalo\ncbs\ncommons\nconservatives\ncontacts\nconviction\ncorrupt\ncow\n"
    "curve\ndepressed\ndeserved\ndining\ndisorders\nduration\neddie\nemily\nencouraging\nfarms\nfifteen\nflows\n"
    "genes\ngraduated\ngrandmother\nharsh\nheights\nhorn\nhurry\nimmune\ninflation\ningredients\ninspection\ninstall\n"
    "instruction\nintensity\ninventory\ninvestigated\ninvitation\njudicial\njustify\nkyle\nlakes\nlean\nlecture\nlibraries\n"
    "logical\nmason\nmeaningful\nmigration\nmissile\nmotivated\nmuscles\nnancy\nnorman\nnorthwest\nnurses\norgan\n"
    "patrol\npearl\npeer\npepper\npig\npile\nplug\nprovision\nreleasing\nrequiring\nrevised\nrod\n"
    "scream\nstairs\nstaring\nstatistical\nsticks\nstrangers\nsucceeded\nsweat\nswitched\nsyrian\ntattoo\nteenage\n"
    "thunder\ntours\ntragedy\ntrauma\nvincent\nwrestling\nzoo\naccordance\nacquire\nactivist\nactivists\naddresses\n"
    "alike\napplicable\narrow\navailability\nbend\nboundary\nbreach\ncabin\ncage\nchancellor\ncheers\ncircles\n"
    "closet\ncombine\ncompanion\ncomparing\nconsciousness\nconsultant\ncontroller\ncorresponding\ncourtesy\ncuba\ndamages\ndemanding\n"
    "disc\ndishes\ndozens\neagle\neaten\nembassy\nengaging\nfascinating\nfinancing\nfitted\nflexible\ngaining\n"
    "gentlemen\ngoodness\nguilt\nhaven\nhelicopter\nhomework\nhouseholds\niconic\ninfected\nkeen\nkenya\nlesser\n"
    "liberals\nlip\nmandatory\nmanufactured\nmechanics\nmere\nmiracle\nmud\nmurphy\nnathan\nobservation\noperates\n"
    "owe\npermitted\nphenomenon\npittsburgh\nplayoff\nprecise\nprofession\nprospect\nprotective\nproviders\npublisher\nputin\n"
    "reportedly\nretreat\nrookie\nsandwich\nseeks\nsentences\nseparation\nsexually\nski\nskilled\nsterling\nstuart\n"
    "surgeon\ntheft\nunderstands\nvalve\nvisa\nwashing\nadjacent\nagreements\nappreciation\narabia\nathletic\nauthorized\n"
    "banner\nbeijing\nblew\nblocking\nbrad\ncaribbean\ncharm\nchasing\nclimbing\ncolony\ncomplaining\ncookies\n"
    "cruel\ncurriculum\ndeadline\ndeer\ndelta\ndemanded\ndive\ndivide\neaster\nelectoral\neleven\nentity\n"
    "excessive\nexercises\nfeminist\ngoverning\nham\nheal\ninterface\nios\njewelry\njournalism\njuan\njulia\n"
    "jungle\nlinear\noccasional\noriented\npete\npilots\nprayers\npredicted\npressed\npreventing\nprof\nprovisions\n"
    "pursuit\nrap\nreflected\nreminder\nrestored\nresume\nrev\nrichmond\nridge\nsamsung\nscholars\nsealed\n"
    "sounded\nsri\nstreams\nstrongest\ntends\ntribe\nunfortunate\nvariable\nvictorian\nworrying\nzones\nace\n"
    "adjusted\nalternate\narrives\nartwork\nashley\nathlete\nattraction\nbabe\nbankruptcy\ncanon\ncapabilities\ncared\n"
    "catherine\nchains\nclosure\ncognitive\ncompetitors\nconnecticut\nconvert\ncooked\ncups\ndeciding\ndefender\ndental\n"
    "diplomatic\ndivisions\ndrum\neditorial\nenabled\nentertaining\nest\nestablishing\neternal\nfreeze\ngeneric\ngrandma\n"
    "grip\nhandful\nhappily\nharmony\nhmm\nhumble\nhurting\nhybrid\nintentions\ninvesting\nkeyboard\nlasting\n"
    "locally\nloses\nmild\nminimal\nmixing\nmolecular\nnearest\nneighbor\nnoon\nnowadays\nopenly\noverview\n"
    "pairs\npalestinian\nparish\npathetic\npoems\npossibilities\npotato\npotter\npreference\npromising\nproportion\npurchases\n"
    "rage\nreflects\nrespected\nrestoration\nselfish\nsergeant\nsilk\nstamp\nthrone\nthy\nurge\nvoter\n"
    "warner\nwasting\nwitch\nadvantages\nally\narchives\narray\nassisted\nbacks\nbelly\nbooth\nbreakdown\n"
    "bridges\nbrutal\ncalculated\ncam\ncentres\nchapters\ncitizenship\ncivilians\ncliff\nconflicts\nconsensus\ncycling\n"
    "declaration\ndennis\nderby\ndistinction\ndonations\ndragons\ndraws\nexamined\nfacial\nfaithful\nfatal\nfig\n"
    "fitting\ngenuinely\nhardest\nholland\nhonored\nhunger\nhurricane\nimplications\nimport\ninnovative\nipad\njurisdiction\n"
    "laughter\nlemon\nles\nlifted\nloading\nlung\nmatching\nmighty\nmonetary\nnovels\nnutrition\nore\n"
    "outcomes\noutta\npine\npolls\npoorly\nportugal\npose\npour\nproteins\nprovider\npublish\npurely\n"
    "ralph\nrental\nresolved\nrewards\nsang\nseemingly\nsenators\nseverely\nshark\nshocking\nsouthwest\nstudios\n"
    "survivors\ntales\ntechnically\ntitled\ntraditions\nunlimited\nwashed\nwatches\nadvise\nanxious\nappearances\nbee\n"
    "bombing\ncafe\ncarlos\nchallenged\ncigarettes\ncolin\nconsisting\ncult\ndairy\ndakota\ndarling\ndelighted\n"
    "delivering\ndestroying\ndiary\ndisagree\ndisappear\ndrill\nearliest\nedges\nentries\neuro\nevolved\nexports\n"
    "fixing\nflags\nflies\nforecast\ngovernance\nheated\nhug\nimportantly\nindicating\nindoor\ninfluential\nintend\n"
    "invisible\njeans\njets\njulie\nkaren\nlasted\nlawsuit\nleak\nlighter\nlucas\nmarcus\nmentions\n"
    "meter\nmice\nmusicians\nolive\npassionate\npotatoes\nprevented\nreceiver\nrecommendation\nriot\nrogers\nroster\n"
    "safer\nsells\nsentenced\nservant\nsetup\nskull\nslot\nsmash\nstatue\nsurprisingly\nsurrender\nsuspicious\n"
    "teenager\ntender\nthoroughly\ntodd\ntreatments\ntweeted\nvacuum\nvariations\nwont\nacknowledged\nadvances\nagrees\n"
    "allegations\nanticipated\napprove\narchitect\nbasin\nbeneficial\nbleeding\nbreed\nbreeding\nbride\nbroadway\nbros\n"
    "bud\nbutler\ncareers\ncartoon\ncelebrities\nchick\ncoke\ncomparable\nconfirmation\nconsole\ncontractor\ncontributing\n"
    "diameter\ndubai\ndublin\ndump\nduo\ndynamics\nelephant\nenhanced\nessays\nexhausted\nfabric\nfabulous\n"
    "fairy\nfathers\nfocuses\nfold\nfreak\nfrustrated\ngambling\ngently\nglorious\ngrief\nharrison\nhistorically\n"
    "hub\nhughes\ninevitable\ninvestigating\nlabels\nlacking\nlaughs\nlayout\nlined\nlodge\nlords\nmerchant\n"
    "merit\nmicro\nmyth\nnintendo\nobjectives\nobsessed\norganised\noverwhelming\npale\nparticles\npastor\npenalties\n"
    "permanently\npets\npockets\npoison\npredict\npresenting\npresidents\npressing\nprints\nprovincial\nraped\nrealised\n"
    "rebel\nrepairs\nrotation\nseparately\nshaking\nshaw\nsocieties\nsolved\nstarring\nstruggles\nsubtle\ntastes\n"
    "throws\ntoll\ntooth\ntorn\ntragic\ntrainer\ntransformed\nunbelievable\nunderneath\nvariation\nviewing\nviral\n"
    "warehouse\nwears\nwidow\nwives\nadjust\nadministrator\naffecting\nallied\naltogether\nanimated\nanswering\nassess\n"
    "assumption\nassured\naustria\navoided\navoiding\nbasket\nbeard\nbio\nblanket\nbrains\nbucket\nburger\n"
    "capability\ncharming\nchiefs\ncommented\ncomputing\nconcentrate\nconducting\nconsequence\ncontinent\ncookie\ncruz\ncurse\n"
    "displays\ndrain\nemissions\nethical\nexcellence\nflame\nforests\nfreely\nfruits\ngrabbed\ngraduation\nhint\n"
    "horizon\nhostile\nimagined\ninhabitants\nink\ninn\nintel\nkicks\nlegends\nlucy\nmagazines\nmatrix\n"
    "measuring\nmiserable\nmomentum\nmonkey\nmontreal\nmotorcycle\nnationwide\nnest\nnewcastle\nnicely\nninth\nnomination\n"
    "notable\nobligation\noptical\noutlook\npenny\npetty\nphd\nports\npreserved\nprogrammes\nprospects\npublishers\n"
    "quantity\nquantum\nrainbow\nrebels\nrecognised\nreed\nreign\nresponding\nretained\nrises\nsaves\nscan\n"
    "scare\nsectors\nshorts\nspan\nspecialized\nspencer\nsubmission\nsunny\nsupporter\ntestament\ntoe\ntops\n"
    "tremendous\nvalued\nwounds\naccommodation\nachievements\naddressing\nadorable\nallegedly\nambulance\nashamed\nassure\nbailey\n"
    "ballot\nbatteries\nblessing\nbtw\ncemetery\nchambers\ncheat\ncheer\nchile\ncigarette\ncompact\ncompleting\n"
    "consulting\ncooling\ncorners\ndeficit\ndemo\ndemon\ndemonstration\ndetected\ndetection\ndoll\ndonated\nelaborate\n"
    "elder\nencountered\nexpertise\nexploring\nfiber\nfilmed\nfried\ngrocery\nguided\nguinea\nhalfway\nhappier\n"
    "heels\nholmes\nhull\nindependently\nindication\ninsisted\ninstances\nintensive\ninteractive\nintimate\nlaundry\nlbs\n"
    "lifting\nlinda\nmartial\nnigerian\nnortheast\nobserve\npacking\npanels\npassword\npokemon\npolitically\npresumably\n"
    "pretending\npriorities\npronounced\nprosecution\nproves\npulse\npurchasing\nqualities\nqueens\nrational\nrealm\nreforms\n"
    "revenues\nrides\nripped\nrope\nshadows\nshout\nsierra\nsmartphone\nspecified\nspectacular\nstan\nstreak\n"
    "subscription\nswitching\ntechnological\ntemporarily\ntolerance\ntourists\ntraditionally\ntraveled\ntreats\nunhappy\nwhites\nyup\n"
    "accomplish\nadequate\nalter\napology\narkansas\nattributed\nbeg\nbelonging\nbooked\nbout\nbowling\nbrass\n"
    "buzz\nclarke\ncomeback\ncos\ncrops\ndeclare\ndesigners\ndetect\ndiagnosed\ndiesel\ndimensions\ndip\n"
    "disturbing\ndoesnt\ndot\ndresses\ndylan\neffectiveness\neliminated\nellen\nembarrassed\nexceptional\nfiling\nfled\n"
    "foul\nfrankly\nfreezing\ngraph\nhack\nhannah\nhatred\nignorant\ninfluences\ninteract\njudging\nknights\n"
    "lamp\nlimitations\nmajesty\nmeasurement\nmeasurements\nmedian\nmedieval\nmilan\nmobility\nmontana\nmurders\nnyc\n"
    "omg\norientation\noven\nowen\npassport\npenis\npills\nplanets\nproceeds\nrabbit\nraises\nranges\n"
    "rats\nretire\nrhythm\nruth\nsavage\nservers\nshook\nshooter\nsiblings\nslim\nsomeday\nsophisticated\n"
    "spam\nspeeds\nstack\nstance\nstatic\nsubway\nsupportive\nsurgical\nsymbols\ntablet\ntent\nthesis\n"
    "tide\ntravels\nwallace\nwarfare\nwarming\nweekends\nwithdraw\nwithdrawal\nyoungest\naging\nairline\nalternatives\n"
    "anyways\nargues\naudit\nauthentic\nave\nbackwards\nblonde\nblows\nbolt\nbrooks\nbugs\nbust\n"
    "clearing\nclips\ncollar\ncolumbus\ncomply\ncope\ncounted\ncrashed\ncreepy\ncum\ndenmark\ndivorced\n"
    "donate\ndrawings\ndried\nebay\necho\neditors\nedwards\nemotionally\nenhance\nexperiencing\nextending\nfinale\n"
    "flavor\nfloors\nfreaking\ngloves\nharper\nhart\nignorance\nignoring\nimmigrant\ninduced\ninspiring\nintermediate\n"
    "invention\njesse\njoins\njoking\nlgbt\nlikewise\nlineup\nlogan\nmagnificent\nmathematical\nmeantime\nnails\n"
    "nevada\nnewest\nnonetheless\nnut\nopposing\norigins\norlando\nphysicians\npipeline\nplacement\nplanted\npricing\n"
    "puerto\nquestioning\nrecreation\nrenewed\nresigned\nshallow\nshanghai\nshitty\nsingh\nsins\nsketch\nsmells\n"
    "soda\nspite\nsponsor\nstrengthen\nstrings\nsunset\ntaiwan\nthanksgiving\nthee\nthermal\ntrades\ntransform\n"
    "witnessed\nworkplace\nyelling\nyorkshire\nachieving\naliens\namsterdam\nanalyst\narabic\narctic\nassists\nbennett\n"
    "bristol\nburnt\nbuyer\ncalories\ncannabis\ncease\nchampionships\nchapel\ncloth\nconferences\nconsiders\ncontainer\n"
    "cowboys\ncrushed\ndeployed\ndiffer\ndimensional\neager\nelect\nelevated\nessence\nexecutives\nflames\nfork\n"
    "fur\ngps\nharold\nharvest\nheadline\nhudson\nhype\nidentifying\nimpacts\ninsist\njunk\nkenny\n"
    "kidney\nladder\nlloyd\nlobby\nmarc\nmechanisms\nmineral\nmob\nmodest\nmotors\nmph\nnavigation\n"
    "nicholas\norbit\nparagraph\npassive\npeninsula\nphillips\npill\npork\nportuguese\nprofitable\nprovinces\nranch\n"
    "rays\nreasonably\nreject\nremainder\nschemes\nscreens\nseized\nsemester\nsentiment\nservants\nshipped\nsocks\n"
    "suited\nsupplement\nsurviving\nthereby\nthreshold\ntil\ntin\ntires\ntribal\ntribes\ntrunk\nuncertainty\n"
    "vampire\nvaried\nverdict\nabandon\naccommodate\naccordingly\naesthetic\nalgorithm\naltered\nanchor\nangela\napr\n"
    "arch\nassociations\naudiences\naxis\nbadge\nbernard\nbizarre\nbounce\nbroadcasting\nbullets\nbuses\ncannon\n"
    "carol\ncarriers\nchairs\ncleaned\ncomplexity\nconfusing\nconsultation\ncontinental\nconvenience\ndeliberately\ndiamonds\ndiana\n"
    "dictionary\ndignity\ndimension\ndisappointing\ndiving\ndoug\nduncan\nego\nenthusiasm\nenvironments\nequation\nextract\n"
    "favorites\nferry\nfisher\nflexibility\nflowing\nfridge\nfunctioning\nfusion\ngauge\ngoat\ngraduates\ngut\n"
    "heck\nhelmet\nholders\nideology\nidiots\ninclusion\ninitiatives\ninnings\ninsects\ninstructor\nisolation\nive\n"
    "justified\nkeeper\nlamb\nliar\nmachinery\nmansion\nmega\nmercury\nnamely\nnbc\nneeding\nnerves\n"
    "nhl\nobservations\nordering\npalmer\npaths\npeers\npending\nplatinum\npossess\npraised\npremises\nprobability\n"
    "questioned\nrefuses\nresignation\nrider\nritual\nruins\nshelf\nslam\nstakes\nstarter\nsticking\nsubscribe\n"
    "superman\nsurfaces\nterritories\ntire\ntowers\ntransfers\nutterly\nvoltage\nwarn\nwidth\nworkout\nabu\n"
    "activated\nadaptation\nadvisor\naluminum\napartments\nattitudes\nattorneys\nbail\nbarriers\nbelonged\nbradley\nbrandon\n"
    "broader\nbuck\ncal\ncaroline\ncharacterized\ncivilization\ncongrats\ncontractors\ncreativity\ndealers\ndelicate\nden\n"
    "derek\ndesires\ndisappointment\ndisk\nenters\nevaluate\nformally\nframes\ngoddess\ngov\nhampshire\nharassment\n"
    "hats\nhugh\ninsert\njoan\nlebanon\nleeds\nlegit\nleonard\nliquor\nloser\nmalcolm\nmassage\n"
    "matched\nmessed\nmilwaukee\nmusician\nnato\nnephew\nnotably\norchestra\npackages\npad\npakistani\nparticipated\n"
    "precision\npreservation\npriests\nprivately\nprizes\npulls\nqualifying\nreasoning\nrelaxed\nreporters\nroses\nrumors\n"
    "sail\nsalmon\nsecretly\nseller\nsen\nseo\nsheer\nshifts\nsimpson\nsmallest\nspecially\nstark\n"
    "struggled\nsympathy\ntan\nteenagers\ntheoretical\nthumb\ntimber\ntransparent\ntravis\ntweets\nupside\nurged\n"
    "visitor\nvitamin\nvoid\nvoluntary\nwheat\nwhip\nwipe\nwolves\nwrist\nabused\nacute\nadmiral\n"
    "amanda\narnold\narrange\nbanana\nbehave\nbetting\nblair\nborrow\ncamping\ncapitol\nceltic\nchan\n"
    "chin\ncivic\nclerk\nconclusions\nconsiderably\ncontacted\ncottage\ncoup\ncriticized\ncrude\ndash\ndecreased\n"
    "defended\ndemons\ndeposits\ndisclosure\ndisposal\ndistinctive\ndocumented\ndonation\ndragged\ndrone\nencounters\nensuring\n"
    "enterprises\nescort\nexams\nfirmly\nflour\ngdp\ngeneva\nhindu\nholdings\nindie\nindirect\ninspire\n"
    "institutional\ninterim\ninterviewed\njava\njefferson\njerk\nkarl\nkindly\nkindness\nleaked\nlocals\nlottery\n"
    "louise\nmagnitude\nminus\nnhs\nnoting\nnude\norgans\noutlet\noutlets\nparameters\npause\npledge\n"
    "portal\nprescription\nprotesters\nproving\npublicity\npunished\npuppy\nrecruitment\nscrewed\nshades\nshakespeare\nsilicon\n"
    "slice\nspelling\nspurs\nsubscribers\nsurveys\nsurvivor\ntelegraph\ntits\nvaccine\nvinyl\nwestminster\nwished\n"
    "wonders\naccurately\nadelaide\naffiliate\nalfred\nasylum\nbarn\nbent\nbernie\nbrussels\ncathedral\ncentered\n"
    "clause\ncluster\ncomplained\ncompounds\nconsistency\ncracked\ncylinder\ndancer\ndeaf\ndebts\ndenial\ndigging\n"
    "dock\nentrepreneur\nevident\nexpectation\nexpedition\nexpressing\nextends\nfacilitate\nfailures\nfeat\nfossil\nfounding\n"
    "freight\ngenerating\ngoddamn\nguides\nhonesty\ninappropriate\ninfant\ninitiated\ninjection\ninstrumental\ninsult\ninterference\n"
    "interstate\njulian\nlaunching\nliking\nlinux\nluis\nmates\nmediterranean\nneat\nnegotiate\nneo\nnicole\n"
    "obligations\noffset\noutbreak\npal\npalestine\nperfection\npigs\npirates\nposters\npracticing\npraying\nprobe\n"
    "prohibited\nprojected\npropose\nquarterly\nrecipes\nrecruiting\nrefusing\nrehabilitation\nreid\nremix\nresistant\nreynolds\n"
    "riders\nrobots\nrockets\nroller\nsailing\nshapes\nskinny\nslipped\nsneak\nsolving\nsore\nspark\n"
    "speculation\nsteep\nstevens\nstraw\nsuccessor\ntargeting\ntriggered\ntroubles\nuncertain\nupload\nvector\nviolations\n"
    "weigh\nwhatsoever\nwicked\nabraham\nabsent\nacoustic\nadapt\nancestors\narchive\natomic\nbean\nbicycle\n"
    "bryan\nbump\nbuttons\ncart\ncircus\nclaire\ncocaine\ncohen\ncolleague\ncompelling\ncompiled\ncomplications\n"
    "construct\ncord\ncrowded\ncyber\ndale\ndebates\ndefendant\ndelays\ndense\ndesperately\ndoctrine\nexpose\n"
    "financially\nfreshman\nfurious\ngameplay\ngeography\ngig\nhabitat\nharbour\nhazard\nhydrogen\nimplies\nintact\n"
    "intake\nirrelevant\njaw\njin\nkitty\nlauren\nlawn\nmanufacture\nmartha\nmedals\nmercedes\nmistaken\n"
    "moses\nnashville\nnebraska\nneedle\nolds\norganize\nottawa\noval\npity\npond\nporter\nportions\n"
    "prey\nprophet\nraymond\nrecalled\nreduces\nreferendum\nrefugee\nregulated\nrounded\nruby\nrushed\nsanders\n"
    "satisfy\nscales\nseasonal\nsegments\nsensible\nsequel\nshifted\nshifting\nshining\nslower\nspinning\nstanford\n"
    "stepping\nteammates\ntouches\ntownship\ntravelled\ntwisted\nusb\nvienna\nwade\nwhale\nwritings\nadmire\n"
    "amber\nankle\narmor\nautism\nbachelor\nberry\nbillions\nbrady\nbrisbane\nbulls\nbullying\ncapitalism\n"
    "caution\ncertification\ncharacteristic\nclan\nclash\ncolumns\ncompatible\nconcerts\ncondemned\nconfiguration\ncontinuously\nconvincing\n"
    "coupled\ncuriosity\ndelight\ndetermining\nentities\nexceptions\nexplosive\nflooding\nfortunate\nfortunately\nfoundations\nfrontier\n"
    "frustrating\nfrustration\ngeographic\nglenn\ngrande\ngrasp\nhandy\nhardcore\nharmful\nheadache\nhers\nhispanic\n"
    "incentive\ninclusive\ninfections\njackie\njoel\nkissing\nlanes\nlicence\nlungs\nmadness\nmandate\nmanga\n"
    "memorable\nmerger\nminorities\noccurring\norganizing\nperforms\npoker\nportable\npriced\nquebec\nrandomly\nrankings\n"
    "realizing\nresign\nrevealing\nrico\nrobbery\nrub\nrunners\nsally\nscattered\nscout\nsearched\nsexuality\n"
    "shouting\nslap\nsteak\nsuccession\nsuperintendent\nsuspicion\nsweep\ntactical\ntalents\ntherapist\nthereafter\nthorough\n"
    "tuition\ntumor\nusd\nvariables\nvarying\nwholesale\nwwe\nadministered\naffiliated\napples\narchitectural\nartillery\n"
    "assembled\nbangladesh\nbarack\nbeaches\nbees\nboarding\nbothered\ncanvas\ncanyon\ncasey\ncheek\nchen\n"
    "cincinnati\ncircular\ncirculation\nclearance\ncloses\ncoincidence\ncomedian\ncommands\ncommissioned\nconcentrated\nconscience\ncooler\n"
    "countless\ncurry\ndame\ndeceased\ndedication\ndefining\ndetention\ndisputes\ndrake\nemploy\nenforce\nexplicit\n"
    "explicitly\neyed\nflorence\nflu\nforbidden\nfraction\nhes\ninfantry\nintegral\ninvestor\njanet\njudged\n"
    "katie\nkidnapped\nlectures\nlightly\nlinking\nmaintains\nmarble\nmaritime\nmelt\nmodes\nmonica\nmumbai\n"
    "nominee\noath\noffence\npackaging\npatriots\npee\npillow\npirate\npolar\nprediction\npreview\nprocessed\n"
    "pursuing\npuzzle\nrapper\nrebecca\nreconstruction\nrenowned\nrevelation\nsara\nscholar\nsharks\nshoots\nskirt\n"
    "socially\nspa\nspike\nsprint\nstir\nstuffed\nsubstantially\nsuburbs\nsuperb\nsupposedly\ntab\ntendency\n"
    "theirs\ntoast\ntoes\ntouchdown\ntraits\ntrek\ntricky\ntriumph\nuber\nunderwear\nunto\nviable\n"
    "waist\nwelcomed\nwit\nwreck\nabsurd\naccessories\nadrian\nadvocates\nambitious\namid\nannoyed\nappealing\n"
    "appointments\nassumptions\nballet\nbargain\nbinary\nblend\nblogs\nbrake\nbuilds\nbusinessman\ncab\nchi\n"
    "col\ncollision\ncolombia\ncompassion\nconsumed\ncorrected\ncorrection\ncough\ncousins\ncritic\nczech\ndefenders\n"
    "denying\ndepot\ndistress\ndocumentation\ndoubts\ndramatically\ndrank\ndudes\neats\nelegant\nelevator\nellis\n"
    "exchanges\nexcuses\nexecute\nfactories\nfeast\nfinland\nfrederick\nfrost\ngoin\nherald\nhike\nhollow\n"
    "homeland\nimported\ning\ninternationally\niraqi\nitunes\nkane\nkissed\nlame\nlicensing\nlily\nlimiting\n"
    "locker\nmainland\nmarking\nmeditation\nmessenger\nmetals\nmissiles\nmunich\nnorwegian\npencil\nphilosophical\npierre\n"
    "pipes\nplasma\nplea\npunish\npurse\nquarterback\nreagan\nref\nrelieved\nreplies\nreservation\nrhetoric\n"
    "rivals\nrushing\nsalvation\nsanctions\nsecular\nsensitivity\nshane\nsigh\nsixteen\nsovereign\nspecifications\nspends\n"
    "spouse\nstat\nsupervisor\nsynthetic\nteaches\ntense\nterrifying\ntoyota\ntracked\ntraders\ntroy\nvarieties\n"
    "vegan\nwaking\nwalmart\nwang\nwilderness\nadmits\nadviser\naggregate\nanal\nanatomy\nannie\nannounces\n"
    "applicants\nautomobile\nbarnes\nbreasts\ncement\nchess\nciting\ncolonies\ncomposite\nconsequently\nconsist\ncouncils\n"
    "cox\ncurtis\ndecorated\ndelegates\ndreaming\ndull\nenables\nfare\nfashioned\nfeared\nfloat\ngenerator\n"
    "grind\ngrinding\ngrove\nguessing\ngum\nhobby\nhunters\nidol\nillusion\nincorrect\njun\njunction\n"
    "lance\nleap\nlocate\nlocks\nlou\nlynch\nmanages\nmasses\nmedicare\nmodeling\nmotive\nnazis\n"
    "neighbourhood\nnetworking\nnewer\nnewton\noppose\noptimal\novertime\npacks\npermits\nplaystation\npops\npostal\n"
    "predictions\nprep\nprofound\nprosecutor\nrebellion\nrecipient\nrefund\nremembering\nrescued\nrisky\nrobust\nscam\n"
    "sci\nsep\nshareholders\nsided\nsimulation\nsober\nspice\nsqueeze\nstorms\nsupervision\nsuspects\nswap\n"
    "swept\nterrain\nterrified\nthemed\nthreaten\nthrilled\ntowel\ntrio\ntubes\nunconscious\nund\nvaries\n"
    "vegetable\nverified\nvibe\nvirtue\nwifi\nwishing\nworkforce\nzombie\nacre\nairports\nalot\namen\n"
    "andrews\narise\nashes\nautomotive\nbattlefield\nbegging\nberkeley\nbloom\nbore\nbundle\nbutterfly\nbuys\n"
    "casualties\ncatches\nchad\nclown\ncommittees\nconjunction\ncostly\ncows\ncries\ncuban\ncycles\ndarker\n"
    "davies\ndescent\ndesktop\ndial\ndirectory\ndisabilities\ndischarge\ndiscusses\ndodge\ndowns\ndrilling\ndrums\n"
    "elimination\nenjoys\nespn\nginger\ngovernors\nguild\nhalt\nhan\nhenderson\nibm\nimaging\nimplied\n"
    "impress\ninability\nincoming\nisaac\njar\nkay\nleicester\nliam\nlitigation\nmentor\nmerchandise\nminerals\n"
    "miners\nmonk\nneighborhoods\nnoah\nnorm\nobtaining\noccupy\noffended\northodox\noverhead\npac\npainter\n"
    "perth\npierce\npistol\nprinter\nprone\nraiders\nreadily\nreflecting\nregiment\nremembers\nreunion\nrevival\n"
    "sanctuary\nsatan\nsatisfying\nseas\nsecuring\nsensors\nseoul\nshells\nsiege\nsixty\nsleeve\nsonic\n"
    "soundtrack\nspeeches\nspine\nsteering\nsubstances\nsullivan\nsustain\ntenure\ntexture\nthankful\ntranslate\ntreasurer\n"
    "triangle\nunclear\nupgraded\nvenezuela\nvenice\nvladimir\nwizard\nyankees\nabsorbed\nadmin\naffection\nairplane\n"
    "altitude\nathens\nattributes\nbaked\nbaking\nbeautifully\nbetty\nbiblical\nbmw\nboo\ncardiff\ncollapsed\n"
    "coloured\ncompetent\ncountryside\ncracking\ncrane\ndebris\ndelegation\ndemographic\ndescriptions\ndonor\neasiest\neducate\n"
    "enabling\nenrolled\nenrollment\nessex\nexceed\nexcluding\nexpressions\nfierce\nforgetting\ngabriel\ngarlic\ngaza\n"
    "gratitude\nhail\nheroin\nhonda\nhooked\nillustration\nimpose\nindicator\ninequality\nins\ninterpreted\njamaica\n"
    "joey\njoshua\njournals\nleisure\nlend\nlengths\nleon\nlounge\nluckily\nmanuscript\nmarco\nmarines\n"
    "mint\nmolecules\nmontgomery\nnotification\nnova\noakland\noutline\npasta\npolite\nproductions\nprofessors\nquicker\n"
    "randy\nreceipt\nrecognise\nreliability\nresearcher\nretailers\nreviewing\nromans\nrunway\nsculpture\nsenses\nsensor\n"
    "seth\nsharon\nshowcase\nsmoked\nsubsidiary\ntampa\ntenth\ntheology\ntopped\ntrails\nunderwater\nuploaded\n"
    "velocity\nvenues\nwax\nwikipedia\nwinston\nyay\naccountability\naerial\nalbeit\nalcoholic\namazed\nambition\n"
    "ammunition\nanthem\narchitects\nautomated\nbake\nbatch\nborrowed\ncarson\ncatalog\ncatalogue\ncharitable\nchristine\n"
    "clicking\ncollector\ncompliment\nconsisted\ncontinually\ncoordinator\ndamaging\ndanish\ndef\ndeployment\ndrafted\nenjoyable\n"
    "exotic\nexterior\nfeminine\nfirearms\nfountain\nfury\ngenocide\nglance\nglow\nhay\nheadlines\nhebrew\n"
    "hometown\nhumanitarian\nhungary\nidaho\nimmunity\nimplementing\ninherited\nkillers\nlabeled\nlebron\nliberation\nlikelihood\n"
    "lone\nmassacre\nmeme\nmitch\nmod\nnationalist\nnationals\nnecessity\nnickname\nnixon\nobserver\noffshore\n"
    "optional\npapa\nparked\npaste\npioneer\nplaza\nprescribed\npressures\nprosperity\nrecreational\nreds\nrefuge\n"
    "religions\nrenewable\nrichardson\nricky\nrode\nronald\nsack\nsettlements\nsheffield\nshortage\nskies\nsmarter\n"
    "smiles\nsophie\nsphere\nsponsors\nstamps\nstare\nsuburban\nsung\nsuppliers\ntablets\nterribly\nterritorial\n"
    "thirds\nthriller\ntoss\ntransgender\ntroubled\nturtle\nverbal\nviolated\nvocals\nwool\nyang\naccountable\n"
    "advocacy\naftermath\naggression\nanalyzed\nangles\narguably\narmies\narmstrong\nassessed\nattractions\nballoon\nbeers\n"
    "bells\nblamed\nblunt\nboobs\nbosses\nbrakes\nbrigade\nbulgaria\nburial\ncanceled\ncardinal\nchamp\n"
    "champagne\ncheated\nchorus\nchrome\nclarity\nclassics\ncleaner\ncombining\nconclude\nconfidential\ncoordination\ncracks\n"
    "dancers\ndelaware\ndirecting\ndiscretion\nditch\ndome\ndope\ndrought\nducks\ndumped\nelevation\nentrepreneurs\n"
    "epa\nesteem\neva\nexplored\nfinances\nfinishes\nfog\nframed\nfucks\ngesture\nghana\ngibson\n"
    "gif\ngilbert\ngosh\ngriffin\nhistorian\nhorizontal\nhospitality\nhostage\nhottest\nindividually\ninevitably\njeffrey\n"
    "kenneth\nlad\nlakers\nlasts\nleagues\nleslie\nlistings\nliteracy\nmarriages\nmigrants\nmins\nmisleading\n"
    "moisture\nmonument\nmortality\nnotices\nobsession\nopt\nparticle\npeanut\npenn\npersistent\npersonalities\npetroleum\n"
    "pharmaceutical\nprogression\nquinn\nrack\nrebuild\nrecordings\nrejection\nrelaxing\nreservoir\nrespects\nriley\nscrap\n"
    "sebastian\nsensation\nshaft\nshepherd\nshuttle\nslope\nsnack\nsounding\nspecialists\nspotlight\nstabbed\nstern\n"
    "stiff\nstriker\nsudan\nsued\nsums\nsworn\ntel\nterrific\ntheres\ntitans\ntomatoes\ntory\n"
    "trafficking\ntransparency\ntrinity\nunemployed\nunite\nunlock\nvault\nvet\nvince\nwagon\nwalt\nwithdrawn\n"
    "accessed\nadverse\naiming\nallah\nalumni\nana\nawhile\naye\nbastard\nbehaviors\nbikes\nbiography\n"
    "broker\nbrowser\nbury\ncellular\ncocktail\ncod\nconditioning\nconsuming\ncontracted\ncostumes\ncounseling\ncrews\n"
    "cubs\ncuz\ndangers\ndesigning\ndestructive\ndevelops\ndislike\ndoubled\ndoubles\neconomies\nembedded\nemerge\n"
    "excluded\nexpects\nfarewell\nfeeds\nfist\nfond\nfoolish\nfrog\nfry\ngarcia\ngifted\nhacking\n"
    "hawks\nheir\nhighlighted\nholocaust\nhomer\nhon\nhopkins\nimprisonment\nindonesian\nirs\nisnt\njenny\n"
    "lacks\nlandlord\nlandmark\nlanka\nlaunches\nleaning\nliable\nmemphis\nmidst\nmisery\nmodule\nmommy\n"
    "monroe\nmosque\nmoss\nmuseums\nmvp\nnursery\nobamacare\nonion\nperspectives\nperu\nphrases\nplague\n"
    "plains\npositively\npowell\nprevents\nprofiles\npursued\nraids\nrecruit\nresting\nrex\nrogue\nroosevelt\n"
    "salaries\nseated\nsharply\nshowers\nsincerely\nsings\nsolidarity\nspecialty\nsupernatural\nsurprises\ntens\nthirteen\n"
    "tomb\ntouring\ntraces\ntrademark\ntrim\numbrella\nutilities\nvoyage\nweaker\nwillie\nyields\nabbey\n"
    "accepts\nadjustment\nandrea\nassignments\nattachment\nbaron\nbeatles\nbelfast\nblah\nblaming\nbomber\nbunny\n"
    "candle\ncarved\nchoir\nclutch\ncoconut\ncommitting\ncomprising\nconfession\nconsume\ncorridor\ncredibility\ncredited\n"
    "critically\ndem\ndistracted\ndolphins\nestates\nferguson\nferrari\nfilters\nfools\nfourteen\ngeometry\nghosts\n"
    "gossip\ngrandparents\nhaul\nheader\nheadphones\nhighways\nholly\nimmense\nimports\nincentives\ninterfere\nintersection\n"
    "investigators\njuvenile\nkarma\nknocking\nkurt\nleaks\nleverage\nlil\nlining\nluther\nmanila\nmankind\n"
    "mapping\nmasks\nmed\nmetric\nmilitia\nnaming\nncaa\nnike\nnode\nobstacles\nopener\noverwhelmed\n"
    "performers\npointless\npoles\npreferences\nprompted\nproximity\nqualification\nqualifications\nranger\nrendered\nrented\nreversed\n"
    "robbed\nsadness\nscenarios\nselective\nseniors\nshiny\nsocialism\nsour\nspoon\nstressful\nstretched\nsucking\n"
    "teddy\ntenants\nterrace\nthief\ntransported\ntribunal\nundoubtedly\nuniforms\nverify\nvillain\nwhats\nwhistle\n"
    "workshops\nyale\nyearly\nyemen\nabusive\nalley\nannouncing\nappetite\nbackyard\nbeth\nbeverly\nbids\n"
    "billboard\nblades\nboris\nbully\nburke\ncables\ncalculate\ncalculations\nchicks\nconceived\nconsult\ncrashes\n"
    "crowds\ncunt\ndamned\ndissolved\ndistinguish\ndominate\ndynasty\neconomist\nendorsed\neuropeans\nexamining\nextensively\n"
    "fda\nfestivals\nforehead\nforeigners\nforgiveness\ngem\nglen\ngraves\ngregory\nhaunted\nhayes\nheather\n"
    "hiking\nhypothesis\nillegally\nillustrations\ninclined\ninformal\njew\nlearnt\nlending\nmarker\nmarsh\nmarshal\n"
    "maturity\nmaya\nmessy\nmia\nminneapolis\nmolly\nmorrison\nmtv\nmuhammad\nneighboring\nneighbours\nninja\n"
    "optimistic\noutlined\nowl\nparenting\npeaks\npharmacy\npools\npreparations\nproblematic\nproceeded\nprocessor\npromotional\n"
    "pros\nprospective\npsychiatric\nregulate\nrenaissance\nrepeal\nreuters\nriots\nroast\nrobertson\nrubbish\nsaga\n"
    "salon\nseventeen\nshields\nsliding\nsodium\nsurplus\nswallow\nsystematic\ntheaters\ntransmitted\ntuned\nunacceptable\n"
    "unaware\nuncommon\nunderway\nunified\nunstable\nupstairs\nvague\nwee\nwoo\nzip\nabs\nabundance\n"
    "advancing\nahh\nalberta\nant\nantique\nautonomy\nbaptist\nbehavioral\nbiden\nbooking\nbreeze\nbrett\n"
    "browns\ncanadians\ncarnival\ncommodity\ncongressman\ncontainers\ncooperative\ncoral\ncorrelation\ncorrespondent\ncoupon\ncovid\n"
    "crosses\ncurtain\ncurves\ndefines\ndelivers\ndemonstrates\ndentist\ndodgers\ndough\ndug\nendangered\nenvelope\n"
    "exhibited\nfade\nfatigue\nfellowship\nfictional\nfragile\nfringe\nfulfill\ngaps\ngranite\ngreens\nhandbook\n"
    "hardy\nhonors\ninsights\ninstinct\ninviting\nirony\nivan\njoyce\njudgement\njudiciary\njumps\nlads\n"
    "legion\nlethal\nlime\nlively\nlogistics\nlowered\nlynn\nmaid\nmanning\nmanuel\nmaple\nmickey\n"
    "midfielder\nmindset\nmistress\nmoms\nmon\nmonkeys\nmorality\nmortal\nmounting\nnonprofit\nnsa\noils\n"
    "operative\nouts\nowed\npanama\npatches\npickup\nportraits\npouring\nprestigious\nprompt\nquantities\nradius\n"
    "referee\nrelay\nrig\nrisen\nrows\nsacramento\nscroll\nsearches\nsmiled\nsnacks\nsnakes\nsovereignty\n"
    "strips\nstunt\nsubjected\nsucked\nsunlight\nsurf\nsymbolic\nsync\ntaxpayer\ntempted\nthrust\ntrevor\n"
    "trilogy\nurl\nweights\nwheelchair\nwhore\nwiped\nyahoo\nyoure\nyourselves\naccompanying\naccusations\nacids\n"
    "administrators\naired\nallowance\nandre\napologies\narbitrary\natm\nautonomous\naveraged\nbait\nbark\nbets\n"
    "blogger\nbra\nbrighton\nbrotherhood\nbuddhist\nbuilder\ncakes\ncarriage\ncelebrations\ncensorship\nclarify\nclimbed\n"
    "comp\ncompilation\ncomposer\ncomprises\nconstitute\ncorrespondence\ncowboy\ndefendants\ndesirable\ndevastating\ndiagram\ndismiss\n"
    "editions\nerected\nexplorer\nfarther\nfavorable\nfeminism\nflaws\nforums\nfreed\ngalleries\ngasoline\ngenesis\n"
    "geographical\ngoverned\ngovernmental\ngrandson\nhalls\nhandles\nheavier\nherbert\nhints\nincomplete\nincorporate\ninterrupted\n"
    "ivory\nkerry\nkirk\nlang\nlengthy\nlevy\nmanipulation\nmerchants\nmisses\nmlb\nmock\nnecklace\n"
    "niche\nnina\nobscure\npara\npeterson\npopped\nporch\nportrayed\npossessed\nprinceton\nproposition\nrailways\n"
    "readings\nrecession\nrichards\nrim\nseals\nsecondly\nsequences\nsettling\nsherman\nspinal\nspiral\nspit\n"
    "splash\nstretching\nsuccessive\nsuperhero\ntaxpayers\ntherapeutic\nthreads\ntimely\ntomato\ntub\nufc\nundergraduate\n"
    "undertaken\nuranium\nutter\nvietnamese\nvolleyball\nwalsh\nwires\nyell\nadvertisement\nanalysts\nanalyze\natmospheric\n"
    "bangkok\nbatting\nbitches\nbracket\nbranded\nbryant\ncairo\ncardiac\ncatholics\ncommanding\nconfirms\nconfronted\n"
    "crashing\ncrawford\ncreep\ndaylight\ndee\ndems\ndevon\ndisclose\ndoe\ndonna\nelbow\nencourages\n"
    "enthusiastic\nenvy\nestablishments\nexile\nexploitation\nfelix\nfutures\ngel\ngenetics\ngoose\ngrill\ngrounded\n"
    "hating\nheel\nheroic\nhut\ninmates\ninstructed\nira\njenkins\njohns\nknives\nlouisville\nmalaysian\n"
    "margins\nmarina\nmat\nmelissa\nmilton\nmiranda\nmonopoly\nnash\nnationally\nnobel\nnorfolk\noutrage\n"
    "owning\npains\npaperwork\npdf\npitched\npoets\npoisoning\npromptly\nque\nrains\nrecovering\nrenewal\n"
    "repeating\nrifles\nrobbie\nruler\nscreams\nsellers\nsights\nsincere\nskating\nskiing\nslaughter\nsmashed\n"
    "sox\nsperm\nspill\nsteadily\nstripped\nsupplier\nswamp\nswan\nswitches\nsynthesis\ntasty\ntattoos\n"
    "teammate\ntestify\ntolerate\ntournaments\ntravelers\ntreason\ntrustees\ntyping\nurine\nvanilla\nvermont\nvic\n"
    "vii\nviolet\nweighing\nwendy\nactivation\nafghan\nafterward\nagreeing\nahmed\nallocated\nappealed\napplause\n"
    "bald\nbarrels\nboil\nborough\nboyd\nbreakthrough\ncalif\ncharities\ncheering\nchooses\nchurchill\ncombinations\n"
    "commenting\ncompetitions\ncone\nconnects\nconvey\ncritique\ncrushing\ncurved\ncyrus\ndecay\ndeclining\ndepressing\n"
    "dessert\ndestinations\ndiagnostic\ndiane\ndifferential\ndiscourse\ndistances\ndominance\ndonors\ndownloaded\neconomically\nentertain\n"
    "evaluated\nexploit\nfireworks\nflown\nfloyd\nfounders\nfreeman\ngandhi\ngateway\nguarantees\nhumidity\nhumour\n"
    "imagery\nimply\nindicators\ninherent\ninland\ninning\ninnocence\ninvestigator\nisle\nivy\njustification\nkatherine\n"
    "lego\nlicenses\nlivestock\nliz\nllc\nmafia\nmanners\nmerry\nmick\nmissionary\nnationalism\nnaughty\n"
    "nepal\nnewman\nnotified\nnotorious\nobey\nolivia\norganizational\noutfits\noutright\noverly\noversight\npanthers\n"
    "persian\nphases\nphotographers\npolling\npopping\nprisons\nprototype\npumpkin\npumps\npunched\nramp\nrand\n"
    "reactor\nreef\nrefined\nrefreshing\nrefusal\nreinforced\nremedies\nreset\nsage\nshave\nsickness\nsimpler\n"
    "sinking\nslots\nsorted\nstaged\nstartup\nstatute\nstems\nstraightforward\nstrengths\nsuffers\nsuperstar\ntelecommunications\n"
    "thieves\nthoughtful\nthru\ntissues\ntoddler\nutilized\nvicious\nvictories\nvikings\nvodka\nwholly\nzoom\n"
    "accidental\naccounted\naddicted\nadjustments\napollo\narchbishop\nassassination\nathletics\nbasics\nbats\nbelgian\nbibliography\n"
    "bot\nbroadly\ncalcium\ncalvin\ncandles\ncapita\ncertainty\ncheeks\nchickens\nchristina\ncitation\nclues\n"
    "collectively\ncommercials\ncommissions\ncompression\ncomprised\nconfess\nconfined\ncongregation\nconsolidated\ncoordinate\ncoordinates\ncube\n"
    "dana\ndeclaring\ndecoration\ndecree\ndefinitions\ndeliberate\ndespair\ndiscovering\ndividend\ndragging\ndrift\ndye\n"
    "eden\neducators\nelectron\nendure\nenzyme\nevolutionary\nexhibits\nextensions\nfellows\nfragments\nfraser\nfuels\n"
    "geological\nglobally\ngrams\nguru\nhacked\nhans\nhatch\nhindi\nhistorians\nhormone\ninadequate\nindianapolis\n"
    "infinity\nintentionally\njoints\nkilometers\nlabs\nlace\nlibya\nlosers\nlouder\nmaiden\nmarching\nmarketplace\n"
    "membrane\nmessing\nmetallic\nmethodology\nmodifications\nmonitors\nmurderer\nnap\nnickel\nniece\nnominations\nnumbered\n"
    "offerings\noverlooked\npardon\npartnerships\npersuade\npier\npoured\npracticed\npredecessor\npremise\nquiz\nrainfall\n"
    "recipients\nreckless\nredemption\nrelates\nrelied\nremedy\nreplay\nrevision\nrooted\nscent\nslate\nspells\n"
    "stimulus\nstrengthening\nstructured\nsunrise\nsurge\ntagged\ntags\ntapes\ntee\ntestified\ntimothy\ntoken\n"
    "tornado\ntracy\ntunes\ntunnels\ntwilight\nunprecedented\nvagina\nverses\nvocabulary\nwellington\nwhoa\nwillingness\n"
    "woody\nworthless\nyacht\naberdeen\nabsorb\naccompany\naccord\nadvancement\nalbany\nalgorithms\nalt\nalternatively\n"
    "anglo\narcher\nasap\nassurance\nbarber\nbash\nbattalion\nbidding\nboycott\nbricks\nbruno\nbuddies\n"
    "bulgarian\ncarpenter\nceased\nchester\ncoding\ncompetitor\ncreators\ncuisine\ndetained\ndioxide\ndolls\ndoom\n"
    "dubbed\neclipse\neighteen\neleanor\nelephants\nenjoyment\nexhaust\nexpired\nflee\nforbes\nforwards\nfries\n"
    "fundraising\ngal\nglimpse\nhahaha\nhawk\nhealthier\nhomemade\nhonorable\ninfectious\ninferior\ninjustice\ninquiries\n"
    "insulin\ninterpret\nintro\njackets\njill\nkindle\nlid\nlindsay\nlogs\nmanor\nmasterpiece\nmelody\n"
    "memo\nmic\nmirrors\nmyanmar\nnarrator\nnate\nnets\nnsw\nobesity\npartisan\nplanting\npony\n"
    "posed\npossessions\nprivileged\nprolonged\npromo\nprotestant\npumping\npupil\nrecruited\nreliance\nrelies\nreluctant\n"
    "relying\nrespiratory\nretention\nrewarded\nribbon\nrochester\nrodgers\nroommate\nrotten\nsands\nschedules\nselecting\n"
    "shah\nshawn\nshotgun\nsingers\nsnapped\nsofa\nsolomon\nsouthampton\nspoil\nspoiled\nstephanie\nsubmarine\n"
    "suburb\nsurgeons\nsympathetic\ntaxation\ntemper\nundergo\nvenus\nweighed\nacquiring\nadditions\nadmitting\nafl\n"
    "aligned\nallan\naltar\namp\narrows\natlas\naustrian\nautomation\nawe\nbalancing\nbanning\nbishops\n"
    "boeing\nbroncos\nbuilders\nburton\ncaesar\ncans\ncarroll\ncavalry\nclara\ncoffin\ncollectors\ncolorful\n"
    "combo\ncommunism\nconductor\nconfront\nconstraints\ncrow\ndavidson\ndecisive\ndecorative\ndefinitive\ndisclosed\ndisplaced\n"
    "disturbed\ndiy\ndoin\nepidemic\neternity\neugene\nevolve\nexplode\nextraction\nfatty\nfilthy\nfletcher\n"
    "flush\nfont\nfreestyle\nglue\ngrandpa\nhairy\nhomicide\nhorns\ninheritance\nintroduces\nironic\nlacked\n"
    "lin\nluggage\nlyon\nmadame\nmaggie\nmarion\nmel\nmelting\nmessaging\nmicrowave\nmidwest\nminimize\n"
    "modi\nmorocco\nnatalie\nops\norganisms\noriginated\nounce\npablo\npeel\npensions\nperformer\npicnic\n"
    "pins\npractitioners\npredominantly\nprimitive\nprovidence\npsychic\npsychologist\npuppet\nreproductive\nrequesting\nresponds\nrestrict\n"
    "retiring\nretrieved\nribs\nrighteous\nrivalry\nrosa\nroyalty\nsandra\nsausage\nseize\nsim\nskeleton\n"
    "spicy\nsticky\nsting\nsufficiently\nthankfully\nthrones\ntick\ntraced\ntrent\ntrusts\ntutorial\ntwentieth\n"
    "unpleasant\nunrelated\nussr\nvacant\nvent\nvicinity\nwan\nwandering\nwardrobe\nwarmth\nweaknesses\nwines\n"
    "wired\namendments\nanalyses\nasses\nassessments\nassisting\naxe\nbackgrounds\nbaldwin\nbelle\nbites\nbombers\n"
    "bonuses\nbred\nbrexit\nbubbles\nbuddha\nbulletin\ncapitalist\ncautious\nclinics\ncommitments\ncompanions\ncomparisons\n"
    "constable\ncooperate\ncoordinated\ncopied\ncounselor\ncurb\ndances\ndarren\ndeeds\ndestined\ndetached\ndevils\n"
    "discounts\ndistribute\ndong\nedgar\nefficiently\neliminating\nelliott\nencouragement\nenforced\nevan\nexplosives\nfaction\n"
    "fascist\nfeathers\nfixtures\nflooded\nfuller\ngamble\ngoalkeeper\ngrandchildren\nguardians\nharmless\nhearings\nhesitate\n"
    "hid\nhips\nhopeful\nhorny\nhungarian\nhygiene\niceland\nimaginary\nimprisoned\ninconsistent\nint\niso\n"
    "jared\njohnston\njudy\nkindergarten\nlatino\nlopez\nloudly\nmechanic\nmegan\nmls\nmodify\nneglect\n"
    "northwestern\noffenders\noppression\npatriotic\nphillip\npictured\npitcher\nplayground\npopulated\nposes\npositioned\nprejudice\n"
    "preston\nprobable\nprobation\nprojection\npromotes\npumped\nrails\nraven\nreceptor\nrehab\nremake\nrendering\n"
    "reproduction\nres\nreservations\nrey\nrhode\nshrimp\nsimilarities\nskins\nslopes\nspelled\nspokesman\nspringfield\n"
    "stained\nstall\nstarving\nstrap\nsubjective\nsurround\nsurroundings\nsweeping\nswinging\ntearing\ntraumatic\ntrillion\n"
    "tucker\nvatican\nvendor\nwatts\nabbott\naboriginal\nacademics\nadopting\nalignment\nallergic\nallison\namended\n"
    "apparatus\nassumes\navengers\nbackpack\nbalcony\nbanker\nbliss\nbodily\nbuffer\ncalgary\nchapman\nchopped\n"
    "collaborative\ncommenced\ncompensate\ncompromised\nconstructive\nconventions\ncosmic\ncrystals\ndaisy\ndefinite\ndemonstrations\ndeparted\n"
    "depths\ndevelopmental\ndisco\ndistraction\ndom\ndorothy\ndoses\ndrawer\ndrones\ndurham\necological\necosystem\n"
    "elvis\neuros\nexclude\nexempt\nexposing\nfaint\nfertility\nfines\nfinn\nfloods\nflynn\nfoam\n"
    "folded\nforemost\nforge\ngreenhouse\nhears\nhierarchy\nideals\nidentities\ninstallations\ninvalid\njade\njointly\n"
    "jung\nkits\nlancaster\nlightweight\nlowering\nmelted\nmetabolism\nneglected\nnegotiated\nnegotiating\nnegotiation\nnewborn\n"
    "newport\nnodes\nnotch\nomega\nonions\npackers\npaired\nparental\nparody\nparole\nparticipant\npenguin\n"
    "phantom\nphotoshop\npitt\nprecedent\nprevalent\nprom\npromotions\npython\nqatar\nquestionable\nqueue\nquo\n"
    "regrets\nrender\nrespondents\nretaining\nromania\nsailor\nseventy\nshouted\nsimmons\nsims\nslides\nsociology\n"
    "somerset\nsoo\nspecify\nsplitting\nstab\nsupermarket\nsweater\ntenant\ntensions\nthomson\ntortured\ntraction\n"
    "tractor\ntrout\nturnover\nuganda\nunwanted\nupgrades\nvariant\nvegetarian\nvernon\nvisibility\nwarnings\nwherein\n"
    "whiskey\nworms\nwyoming\naaa\nabundant\nafricans\nalexandria\nalgebra\nanalytics\nantenna\nattribute\naudition\n"
    "bankers\nbiting\nbranding\nbravo\nbusted\ncardinals\ncarrie\ncertificates\ncharleston\nchatting\nchop\ncircuits\n"
    "clifford\ncody\ncoleman\ncommanded\ncommissioners\ncommunicating\ncomparative\ncomplement\nconnor\nconquer\nconquest\ncontested\n"
    "continuity\ncornwall\ncrawl\ncredible\ncursed\ndeepest\ndefects\ndelightful\ndepicted\ndetermines\ndigit\ndinosaur\n"
    "doomed\ndrainage\ndrowning\nembarrassment\nequations\nevolving\nexploded\nfairness\nfavored\nfelony\nflats\nflint\n"
    "floral\nfortress\nfulfilled\nfundamentally\ngrabbing\nguts\nhairs\nhammond\nhanding\nhearted\nherb\nherd\n"
    "husbands\nideological\nimmortal\nincumbent\ninsider\ninsufficient\ninterval\njelly\nkai\nkanye\nkidnapping\nkilometres\n"
    "lenses\nlick\nliteral\nlunar\nmaternal\nmatthews\nmaxwell\nmccain\nmcdonald\nmedicines\nmemoir\nmessi\n"
    "miguel\nmodification\nmold\nnailed\nnapoleon\nneighbouring\nnigel\nobjection\nobliged\nobservers\noccurrence\noffspring\n"
    "outrageous\npacket\npads\npatents\npathway\npeach\npersuaded\nplots\npolo\npresenter\nproclaimed\nprohibition\n"
    "prop\nrecognizing\nrecommends\nregistry\nrelieve\nremarkably\nrepaired\nrotating\nsanchez\nsandwiches\nsatellites\nscar\n"
    "scouts\nscripture\nseating\nseminar\nshores\nsilva\nsimplicity\nslightest\nsoftly\nspecimens\nstarbucks\nstereo\n"
    "supplements\nsurrey\nsustainability\nsymphony\ntesla\ntextbook\ntheological\ntrader\nundercover\nvalentine\nvegetation\nvein\n"
    "velvet\nvendors\nviewer\nwebb\nwelcoming\nwhales\nwheeler\nworm\nzombies\naccountant\nactivate\nadmissions\n"
    "alison\namusing\narabs\nbeams\nbehold\nbetrayed\nbiased\nbillionaire\nbloggers\nbrewing\nbrooke\nbypass\n"
    "calculation\ncancellation\ncane\ncapturing\ncatalyst\ncedar\ncelebrates\nclaude\nconcentrations\nconcludes\ncons\ncorpse\n"
    "crab\ncruelty\ndarwin\ndawson\ndecorations\ndementia\ndemonstrating\ndesignation\ndev\ndice\ndiploma\ndisasters\n"
    "discharged\ndispatch\ndisputed\ndots\nduchess\ndunno\neconomists\neds\nelders\nexceeded\nexplanations\nextinction\n"
    "factions\nfoil\nformats\nfreddie\ngardner\ngeology\ngerald\ngraduating\ngram\ngreene\nheath\nheavenly\n"
    "hormones\nhorrific\nhugo\ninfants\ninsect\niris\nissuing\nlifts\nlocking\nlogging\nlookin\nmaurice\n"
    "medications\nmentality\nmetre\nminecraft\nmiracles\nnascar\nneural\nnewsletter\nnineteenth\nnitrogen\nnorms\noceans\n"
    "ooh\npatricia\npaulo\npayroll\nphenomenal\nphilippine\nphotographic\npinch\nping\npolished\npots\npredictable\n"
    "privileges\nprix\nprofessionally\nprotesting\nprotocols\npushes\nqueer\nrebounds\nreckon\nrecycling\nrestriction\nresumed\n"
    "resurrection\nrover\nscars\nscholarships\nshannon\nshelves\nshipment\nslut\nsparks\nspatial\nstainless\nstatutory\n"
    "stellar\nstockholm\nstripes\nstubborn\nsummoned\nsussex\nswords\nsyrup\ntackles\ntamil\ntapping\nteachings\n"
    "tightly\ntina\ntones\ntories\ntransplant\ntraps\nturf\ntwitch\nunlocked\nunusually\nunveiled\nusername\n"
    "vaccines\nveins\nventures\nvip\nvisions\nvoiced\nvolcano\nwarmer\nwebster\nweddings\nyelled\nzach\n"
    "accelerated\naccomplishments\nadvertised\nadvertisements\nark\narmour\nassaulted\natoms\nattach\nawaiting\nbayern\nbind\n"
    "blessings\nblu\nbluetooth\nboiling\nborrowing\nbowls\nbradford\nbum\nbutcher\nchandler\ncheapest\nchloe\n"
    "communists\ncompares\nconception\ncongo\ncounterparts\ncue\ndeed\ndisciplinary\ndreamed\ndwarf\neighty\nelena\n"
    "eligibility\nembraced\nenacted\nendorsement\nenlisted\neyebrows\nfcc\nfinite\nflagship\nforensic\nforthcoming\ngallon\n"
    "gems\nglowing\nglucose\ngore\ngovt\ngown\ngreedy\nhalo\nhilton\nideally\nidentifies\nimproves\n"
    "infamous\ninspirational\ninternally\nkashmir\nknox\nlateral\nleigh\nlent\nlib\nlifelong\nlimestone\nliner\n"
    "majors\nmarched\nmarrying\nmaths\nmemes\nmentioning\nmerge\nmesh\nmigrant\nmohammed\nmonitored\nmoron\n"
    "mortar\nmyths\nnaive\nnat\n";

}  // namespace zicl::demos::detail
